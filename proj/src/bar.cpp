#include "qdga/bar.hpp"

#include <algorithm>
#include <functional>

#include "qdga/errors.hpp"
#include "qdga/parallel.hpp"

namespace qdga {

void add_to(BarChain& chain, const BarWord& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = chain.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) chain.erase(it);
  }
}

int suspended_degree(const Presentation& a, const Monomial& letter) { return a.degree(letter) - 1; }

int bar_degree(const Presentation& a, const BarWord& w) {
  int d = 0;
  for (const auto& letter : w) d += suspended_degree(a, letter);
  return d;
}

std::string format_word(const Presentation& a, const BarWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "|";
    s += a.format(w[i]);
  }
  return s + "]";
}

BarChain bar_differential(const Presentation& a, const BarWord& w) {
  BarChain out;
  int prefix = 0;  // e_i
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Element da = a.differential(Element::monomial(w[i]));
    const Rational internal_sign = -sign_of_parity(prefix);
    for (const auto& [m, c] : da.terms()) {
      if (m.empty()) throw ValidationError("bar construction needs an augmentation ideal closed under d");
      BarWord v = w;
      v[i] = m;
      add_to(out, v, internal_sign * c);
    }
    prefix += suspended_degree(a, w[i]);
    if (i + 1 < w.size()) {
      const Element prod = a.multiply(Element::monomial(w[i]), Element::monomial(w[i + 1]));
      const Rational product_sign = sign_of_parity(prefix);
      for (const auto& [m, c] : prod.terms()) {
        BarWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        v.push_back(m);
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        add_to(out, v, product_sign * c);
      }
    }
  }
  return out;
}

namespace {

int min_generator_degree(const Presentation& a) {
  int m = 0;
  bool first = true;
  for (const auto& g : a.generators()) {
    m = first ? g.degree : std::min(m, g.degree);
    first = false;
  }
  return first ? 2 : m;
}

}  // namespace

void check_dense_dimension(const std::string& what, int degree, std::size_t n) {
  if (n > kMaxDenseDimension)
    throw ScopeError(what + " has " + std::to_string(n) + " basis words in degree " + std::to_string(degree) +
                     " (limit " + std::to_string(kMaxDenseDimension) + "); lower --max-weight");
}

int bar_auto_weight(const Presentation& a, int lo, int hi, int fallback) {
  (void)lo;
  if (min_generator_degree(a) >= 2) return std::max(1, hi + 1);
  return fallback;
}

bool bar_window_exact(const Presentation& a, int lo, int hi, int max_weight) {
  (void)lo;
  // Letters have suspended degree >= 1, so a word of degree n has at most n
  // letters, each of word length at most (n + 1) / 2.
  return min_generator_degree(a) >= 2 && max_weight >= std::max(0, hi + 1);
}

std::vector<Monomial> bar_letters(const Presentation& a, int top, int max_weight) {
  std::vector<Monomial> letters;
  if (a.size() == 0) return letters;
  int gmin = a.generators().front().degree, gmax = gmin;
  for (const auto& g : a.generators()) {
    gmin = std::min(gmin, g.degree);
    gmax = std::max(gmax, g.degree);
  }
  int lo_deg = gmin < 0 ? max_weight * gmin : gmin;
  int hi_deg = gmax > 0 ? max_weight * gmax : gmax;
  // With generators of degree >= 1 every letter has suspended degree >= 0,
  // so no letter can exceed the top word degree.
  if (gmin >= 1) hi_deg = std::min(hi_deg, top + 1);
  for (int d = lo_deg; d <= hi_deg; ++d)
    for (auto& m : a.basis(d, max_weight))
      if (!m.empty()) letters.push_back(std::move(m));
  return letters;
}

BarComplex bar_complex(const Presentation& a, int lo, int hi, int max_weight) {
  a.validate();
  if (!a.has_default_augmentation()) throw ScopeError("bar construction needs the default augmentation");
  BarComplex out;
  out.source = a;
  out.lo = lo;
  out.hi = hi;
  out.truncation.max_weight = max_weight;
  out.truncation.exact = bar_window_exact(a, lo, hi, max_weight);

  const std::vector<Monomial> letters = bar_letters(a, hi + 1, max_weight);
  std::map<int, std::vector<const Monomial*>> by_degree;
  int smin = 0, smax = 0;
  bool any = false;
  for (const auto& l : letters) {
    const int s = suspended_degree(a, l);
    by_degree[s].push_back(&l);
    smin = any ? std::min(smin, s) : s;
    smax = any ? std::max(smax, s) : s;
    any = true;
  }
  auto reachable = [&](int target, int slots) {
    if (target == 0) return true;
    if (!any) return false;
    for (int k = 1; k <= slots; ++k)
      if (static_cast<long long>(k) * smin <= target && target <= static_cast<long long>(k) * smax) return true;
    return false;
  };

  for (int n = lo - 1; n <= hi + 1; ++n) {
    std::vector<BarWord> words;
    BarWord current;
    std::function<void(int)> extend = [&](int remaining) {
      if (remaining == 0) words.push_back(current);
      const int slots = max_weight - static_cast<int>(current.size());
      if (slots <= 0) return;
      for (const auto& [s, group] : by_degree) {
        if (!reachable(remaining - s, slots - 1)) continue;
        for (const Monomial* l : group) {
          current.push_back(*l);
          extend(remaining - s);
          current.pop_back();
        }
      }
    };
    extend(n);
    std::sort(words.begin(), words.end(), [](const BarWord& x, const BarWord& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), MonomialLess{});
    });
    check_dense_dimension("bar complex", n, words.size());
    std::vector<std::string> labels;
    auto& idx = out.index[n];
    for (std::size_t i = 0; i < words.size(); ++i) {
      labels.push_back(format_word(a, words[i]));
      idx.emplace(words[i], i);
    }
    out.complex.set_basis(n, std::move(labels));
    out.words[n] = std::move(words);
  }

  std::vector<int> degrees;
  for (int n = lo - 1; n <= hi; ++n) degrees.push_back(n);
  std::vector<QMatrix> blocks(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t k) {
    const int n = degrees[k];
    const auto& src = out.words.at(n);
    const auto& dst = out.index.at(n + 1);
    QMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      for (const auto& [w, c] : bar_differential(a, src[col])) {
        auto it = dst.find(w);
        if (it == dst.end()) {
          if (out.truncation.exact) throw ValidationError("bar differential leaves the enumerated basis");
          continue;
        }
        d(it->second, col) = c;
      }
    }
    blocks[k] = std::move(d);
  });
  for (std::size_t k = 0; k < degrees.size(); ++k) out.complex.set_differential(degrees[k], std::move(blocks[k]));
  return out;
}

BarCohomology bar_cohomology(const Presentation& a, int lo, int hi, std::optional<int> max_weight) {
  const int w = max_weight.value_or(bar_auto_weight(a, lo, hi, 6));
  BarCohomology out;
  auto bar = bar_complex(a, lo, hi, w);
  out.report = cohomology(bar.complex, lo, hi);
  out.truncation = bar.truncation;
  if (!out.truncation.exact) {
    try {
      const auto wider = bar_complex(a, lo, hi, w + 1);
      out.truncation.stabilized = cohomology(wider.complex, lo, hi).dims() == out.report.dims();
    } catch (const ScopeError&) {
      out.truncation.stabilized = false;  // the wider complex is too large to check
    }
  }
  return out;
}

}  // namespace qdga

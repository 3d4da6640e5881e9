#include "qdga/hochschild.hpp"

#include <algorithm>

#include "qdga/errors.hpp"
#include "qdga/parallel.hpp"

namespace qdga {

namespace {

struct Letter {
  Monomial m;
  int shifted = 0;  // |s a| = |a| - 1
};

// Degree-one operators on the suspended letters, extended to words by the
// Koszul rule: passing s a_1 | ... | s a_{i-1} costs (-1)^{sum |s a_j|}.
//   d1(s a)       = -s(da)
//   d2(s a, s b)  = (-1)^{|s a|} s(ab)
// The outer faces multiply a_1 or a_n into the coefficient module through
// the augmentation, which vanishes on the augmentation ideal.
class FaceAssembler {
 public:
  explicit FaceAssembler(const Presentation& a) : a_(a) {}

  std::vector<std::pair<BarWord, Rational>> boundary(const std::vector<Letter>& w) const {
    std::vector<std::pair<BarWord, Rational>> out;
    BarWord base;
    for (const auto& l : w) base.push_back(l.m);
    long long passed = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == 0 || i + 1 == w.size()) outer_face(w[i]);
      const Element da = a_.differential(Element::monomial(w[i].m));
      for (const auto& [m, c] : da.terms()) {
        BarWord v = base;
        v[i] = m;
        out.emplace_back(std::move(v), Rational(-sign_of_parity(passed)) * c);
      }
      if (i + 1 < w.size()) {
        const Rational s = sign_of_parity(passed + w[i].shifted);
        const Element ab = a_.multiply(Element::monomial(w[i].m), Element::monomial(w[i + 1].m));
        for (const auto& [m, c] : ab.terms()) {
          BarWord v;
          v.reserve(base.size() - 1);
          for (std::size_t j = 0; j < base.size(); ++j) {
            if (j == i) {
              v.push_back(m);
              ++j;
            } else {
              v.push_back(base[j]);
            }
          }
          out.emplace_back(std::move(v), s * c);
        }
      }
      passed += w[i].shifted;
    }
    return out;
  }

 private:
  void outer_face(const Letter& l) const {
    if (!a_.augmentation(Element::monomial(l.m)).is_zero())
      throw ValidationError("letter " + a_.format(l.m) + " is not in the augmentation ideal");
  }

  const Presentation& a_;
};

bool letter_lex_less(const BarWord& x, const BarWord& y) {
  const MonomialLess less;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (less(x[i], y[i])) return true;
    if (less(y[i], x[i])) return false;
  }
  return x.size() < y.size();
}

}  // namespace

HochschildComplex hochschild_complex(const Presentation& a, int lo, int hi, int max_weight) {
  a.validate();
  if (!a.has_default_augmentation()) throw ScopeError("Hochschild complex needs the default augmentation");
  HochschildComplex out;
  out.source = a;
  out.lo = lo;
  out.hi = hi;
  out.truncation.max_weight = max_weight;
  out.truncation.exact = bar_window_exact(a, lo, hi, max_weight);

  std::vector<Letter> letters;
  for (auto& m : bar_letters(a, hi + 1, max_weight)) {
    const int s = a.degree(m) - 1;
    letters.push_back({std::move(m), s});
  }
  int smin = 0, smax = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    smin = i ? std::min(smin, letters[i].shifted) : letters[i].shifted;
    smax = i ? std::max(smax, letters[i].shifted) : letters[i].shifted;
  }
  const int bottom = lo - 1, top = hi + 1;

  // Breadth-first by tensor length; a partial word survives while some
  // completion within the remaining slots can land in [bottom, top].
  std::map<int, std::vector<std::vector<Letter>>> by_degree;
  std::vector<std::pair<std::vector<Letter>, int>> layer{{{}, 0}};
  for (int length = 0; length <= max_weight && !layer.empty(); ++length) {
    std::vector<std::pair<std::vector<Letter>, int>> next;
    const int remaining = max_weight - length;
    for (auto& [w, deg] : layer) {
      if (bottom <= deg && deg <= top) by_degree[deg].push_back(w);
      if (remaining == 0) continue;
      for (const auto& l : letters) {
        const int d = deg + l.shifted;
        const long long reach_lo = d + static_cast<long long>(std::min(0, smin)) * (remaining - 1);
        const long long reach_hi = d + static_cast<long long>(std::max(0, smax)) * (remaining - 1);
        if (reach_hi < bottom || reach_lo > top) continue;
        auto v = w;
        v.push_back(l);
        next.emplace_back(std::move(v), d);
      }
    }
    layer = std::move(next);
  }

  for (int n = bottom; n <= top; ++n) {
    auto& ws = by_degree[n];
    check_dense_dimension("Hochschild complex", n, ws.size());
    std::vector<BarWord> plain;
    for (const auto& w : ws) {
      BarWord b;
      for (const auto& l : w) b.push_back(l.m);
      plain.push_back(std::move(b));
    }
    std::vector<std::size_t> perm(plain.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) { return letter_lex_less(plain[i], plain[j]); });
    std::vector<BarWord> sorted;
    std::vector<std::vector<Letter>> sorted_letters;
    std::vector<std::string> labels, dual_labels;
    auto& idx = out.index[n];
    for (std::size_t k : perm) {
      idx.emplace(plain[k], sorted.size());
      labels.push_back(format_word(a, plain[k]));
      dual_labels.push_back(labels.back() + "*");
      sorted.push_back(std::move(plain[k]));
      sorted_letters.push_back(std::move(ws[k]));
    }
    ws = std::move(sorted_letters);
    out.chains.set_basis(n, std::move(labels));
    out.cochains.set_basis(-n, std::move(dual_labels));
    out.words[n] = std::move(sorted);
  }

  const FaceAssembler faces(a);
  std::vector<int> degrees;
  for (int n = bottom; n < top; ++n) degrees.push_back(n);
  std::vector<QMatrix> blocks(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t k) {
    const int n = degrees[k];
    const auto& src = by_degree.at(n);
    const auto& dst = out.index.at(n + 1);
    QMatrix b(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      for (auto& [w, c] : faces.boundary(src[col])) {
        auto it = dst.find(w);
        if (it == dst.end()) {
          if (out.truncation.exact) throw ValidationError("Hochschild boundary leaves the enumerated basis");
          continue;
        }
        b(it->second, col) += c;
      }
    }
    blocks[k] = std::move(b);
  });
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    out.cochains.set_differential(-degrees[k] - 1, blocks[k].transpose());
    out.chains.set_differential(degrees[k], std::move(blocks[k]));
  }
  return out;
}

HochschildReport hochschild_trivial_coefficients(const Presentation& a, int lo, int hi, std::optional<int> max_weight) {
  const int w = max_weight.value_or(bar_auto_weight(a, lo, hi, 6));
  const auto hc = hochschild_complex(a, lo, hi, w);
  HochschildReport out;
  out.homology = cohomology(hc.chains, lo, hi);
  out.cohomology = cohomology(hc.cochains, -hi, -lo);
  out.truncation = hc.truncation;
  if (!out.truncation.exact) {
    try {
      const auto wider = hochschild_complex(a, lo, hi, w + 1);
      out.truncation.stabilized = cohomology(wider.chains, lo, hi).dims() == out.homology.dims() &&
                                  cohomology(wider.cochains, -hi, -lo).dims() == out.cohomology.dims();
    } catch (const ScopeError&) {
      out.truncation.stabilized = false;
    }
  }
  return out;
}

}  // namespace qdga

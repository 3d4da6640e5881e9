#include "qdga/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qdga/errors.hpp"
#include "qdga/expression.hpp"

namespace qdga {

std::string to_string(Flavor f) { return f == Flavor::Associative ? "associative" : "commutative"; }

Element Element::monomial(Monomial m, Rational c) {
  Element e;
  e.add_term(m, c);
  return e;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Presentation::Presentation(Flavor flavor, std::vector<Generator> generators, MonomialOrder order)
    : flavor_(flavor), order_(order), generators_(std::move(generators)), differential_(generators_.size()) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_identifier(g.name)) throw ValidationError("invalid generator name '" + g.name + "'");
    if (!seen.insert(g.name).second) throw ValidationError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<int> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Presentation::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw ValidationError("unknown generator '" + std::string(name) + "'");
  return *i;
}

void Presentation::set_differential(int generator, const Element& value) {
  differential_.at(static_cast<std::size_t>(generator)) = normalize(value);
}

void Presentation::set_differential(std::string_view generator, std::string_view expression) {
  set_differential(index_of(generator), parse_element(*this, expression));
}

void Presentation::set_augmentation(int generator, const Rational& value) {
  if (generator < 0 || static_cast<std::size_t>(generator) >= generators_.size())
    throw ValidationError("augmentation override for unknown generator");
  if (value.is_zero())
    augmentation_.erase(generator);
  else
    augmentation_[generator] = value;
}

int Presentation::rank(int generator) const {
  return order_ == MonomialOrder::Ascending ? generator : static_cast<int>(generators_.size()) - 1 - generator;
}

int Presentation::degree(const Monomial& m) const {
  int d = 0;
  for (int g : m) d += generator(g).degree;
  return d;
}

std::optional<int> Presentation::degree(const Element& e) const {
  std::optional<int> d;
  for (const auto& [m, c] : e.terms()) {
    const int dm = degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

std::optional<std::pair<Monomial, int>> Presentation::normalize_word(const Monomial& word) const {
  Monomial w = word;
  int sign = 1;
  if (flavor_ == Flavor::Commutative) {
    // Insertion sort by rank; each adjacent swap of x, y costs (-1)^{|x||y|}.
    for (std::size_t i = 1; i < w.size(); ++i) {
      for (std::size_t j = i; j > 0 && rank(w[j - 1]) > rank(w[j]); --j) {
        if (is_odd(generator(w[j - 1]).degree) && is_odd(generator(w[j]).degree)) sign = -sign;
        std::swap(w[j - 1], w[j]);
      }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] == w[i - 1] && is_odd(generator(w[i]).degree)) return std::nullopt;
  }
  return std::make_pair(std::move(w), sign);
}

Element Presentation::normalize(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    for (int g : m)
      if (g < 0 || static_cast<std::size_t>(g) >= generators_.size())
        throw ValidationError("element refers to an unknown generator index");
    auto nf = normalize_word(m);
    if (nf) out.add_term(nf->first, nf->second * c);
  }
  return out;
}

Element Presentation::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      auto nf = normalize_word(w);
      if (nf) out.add_term(nf->first, nf->second * ca * cb);
    }
  }
  return out;
}

Element Presentation::differential(const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Rational sign = sign_of_parity(prefix_degree);
      for (const auto& [dm, dc] : differential_of(m[i]).terms()) {
        Monomial w(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i));
        w.insert(w.end(), dm.begin(), dm.end());
        w.insert(w.end(), m.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.end());
        auto nf = normalize_word(w);
        if (nf) out.add_term(nf->first, nf->second * sign * c * dc);
      }
      prefix_degree += generator(m[i]).degree;
    }
  }
  return out;
}

Rational Presentation::augmentation(const Element& e) const {
  Rational total = 0;
  for (const auto& [m, c] : e.terms()) {
    Rational v = c;
    for (int g : m) {
      auto it = augmentation_.find(g);
      if (it == augmentation_.end()) {
        v = 0;
        break;
      }
      v *= it->second;
    }
    total += v;
  }
  return total;
}

void Presentation::validate() const {
  if (differential_.size() != generators_.size()) throw ValidationError("differential table size mismatch");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    const Element& dg = differential_[i];
    for (const auto& [m, c] : dg.terms()) {
      if (degree(m) != g.degree + 1)
        throw ValidationError("d(" + g.name + ") contains " + format(m) + " of degree " + std::to_string(degree(m)) +
                              ", expected " + std::to_string(g.degree + 1));
    }
    if (normalize(dg) != dg) throw ValidationError("d(" + g.name + ") is not in normal form");
    const Element ddg = differential(dg);
    if (!ddg.is_zero()) throw ValidationError("d(d(" + g.name + ")) = " + format(ddg) + " is nonzero");
  }
  for (const auto& [g, v] : augmentation_) {
    if (generator(g).degree != 0)
      throw ValidationError("augmentation override on " + generator(g).name + " which has nonzero degree");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!augmentation(differential_[i]).is_zero())
      throw ValidationError("augmentation does not vanish on d(" + generators_[i].name + ")");
  }
}

std::vector<Monomial> Presentation::basis(int degree, int max_weight) const {
  if (max_weight < 0) throw ValidationError("max_weight must be nonnegative");
  std::vector<int> by_rank(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) by_rank[static_cast<std::size_t>(rank(static_cast<int>(i)))] = static_cast<int>(i);

  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& g : generators_) {
    lo = any ? std::min(lo, g.degree) : g.degree;
    hi = any ? std::max(hi, g.degree) : g.degree;
    any = true;
  }
  auto reachable = [&](int target, int slots) {
    if (target == 0) return true;
    if (!any) return false;
    for (int k = 1; k <= slots; ++k)
      if (static_cast<long long>(k) * lo <= target && target <= static_cast<long long>(k) * hi) return true;
    return false;
  };

  std::vector<Monomial> out;
  Monomial current;
  const bool commutative = flavor_ == Flavor::Commutative;
  std::function<void(int, std::size_t)> extend = [&](int remaining, std::size_t first_rank) {
    if (remaining == 0) out.push_back(current);
    const int slots = max_weight - static_cast<int>(current.size());
    if (slots <= 0) return;
    for (std::size_t r = commutative ? first_rank : 0; r < by_rank.size(); ++r) {
      const int g = by_rank[r];
      const int gd = generators_[static_cast<std::size_t>(g)].degree;
      if (commutative && is_odd(gd) && !current.empty() && current.back() == g) continue;
      if (!reachable(remaining - gd, slots - 1)) continue;
      current.push_back(g);
      extend(remaining - gd, r);
      current.pop_back();
    }
  };
  extend(degree, 0);

  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](int x, int y) { return rank(x) < rank(y); });
  });
  return out;
}

std::optional<int> Presentation::exact_weight(int degree) const {
  if (generators_.empty()) return 0;
  int lo = generators_.front().degree, hi = lo;
  for (const auto& g : generators_) {
    lo = std::min(lo, g.degree);
    hi = std::max(hi, g.degree);
  }
  if (lo > 0) return degree <= 0 ? 0 : degree / lo;
  if (hi < 0) return degree >= 0 ? 0 : degree / hi;
  return std::nullopt;
}

bool Presentation::basis_exact(int degree, int max_weight) const {
  auto w = exact_weight(degree);
  return w && *w <= max_weight;
}

std::string Presentation::format(const Monomial& m) const {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i + 1;
    if (flavor_ == Flavor::Commutative)
      while (j < m.size() && m[j] == m[i]) ++j;
    if (!s.empty()) s += "*";
    s += generator(m[i]).name;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string Presentation::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      s += mag.str();
    } else {
      if (mag != 1) s += mag.str() + "*";
      s += format(m);
    }
  }
  return s;
}

Element parse_element(const Presentation& p, std::string_view text, int line, int first_column) {
  ParsedExpression parsed = parse_expression(text, line, first_column);
  Element raw;
  for (const auto& term : parsed.terms) {
    Monomial w;
    for (const auto& f : term.factors) {
      auto g = p.find(f.name);
      if (!g) throw ParseError("unknown generator '" + f.name + "'", line, f.column);
      w.push_back(*g);
    }
    raw.add_term(w, term.coefficient);
  }
  return p.normalize(raw);
}

Presentation as_commutative(const Presentation& p) {
  Presentation out(Flavor::Commutative, p.generators(), p.order());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) out.set_differential(i, p.differential_of(i));
  for (const auto& [g, v] : p.augmentation_overrides()) out.set_augmentation(g, v);
  return out;
}

}  // namespace qdga

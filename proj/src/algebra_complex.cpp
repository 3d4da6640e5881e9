#include "qdga/algebra_complex.hpp"

#include "qdga/errors.hpp"

namespace qdga {

QVector AlgebraComplex::coordinates(int degree, const Element& e) const {
  const auto& idx = index.at(degree);
  QVector v(idx.size());
  for (const auto& [m, c] : e.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) {
      if (truncation.exact) throw ValidationError("monomial outside the enumerated basis");
      continue;
    }
    v[it->second] = c;
  }
  return v;
}

Element AlgebraComplex::element(int degree, const QVector& v) const {
  const auto& mons = monomials.at(degree);
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(mons[i], v[i]);
  return e;
}

AlgebraComplex algebra_complex(const Presentation& p, int lo, int hi, int max_weight, bool reduced) {
  AlgebraComplex out;
  out.truncation.max_weight = max_weight;
  for (int n = lo - 1; n <= hi + 1; ++n) {
    auto mons = p.basis(n, max_weight);
    if (reduced && !mons.empty() && mons.front().empty()) mons.erase(mons.begin());
    if (!p.basis_exact(n, max_weight)) out.truncation.exact = false;
    std::vector<std::string> labels;
    auto& idx = out.index[n];
    for (std::size_t i = 0; i < mons.size(); ++i) {
      labels.push_back(p.format(mons[i]));
      idx.emplace(mons[i], i);
    }
    out.complex.set_basis(n, std::move(labels));
    out.monomials[n] = std::move(mons);
  }
  if (reduced && !p.has_default_augmentation())
    throw ScopeError("reduced complex needs the default augmentation");
  if (!out.truncation.exact || reduced) {
    for (int g = 0; g < static_cast<int>(p.size()); ++g)
      if (!p.differential_of(g).coefficient({}).is_zero())
        throw ScopeError("weight truncation and reduction need a differential without constant terms (d(" + p.generator(g).name +
                         ") has one)");
  }
  for (int n = lo - 1; n <= hi; ++n) {
    const auto& src = out.monomials[n];
    const auto& dst_index = out.index[n + 1];
    QMatrix d(dst_index.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Element image = p.differential(Element::monomial(src[col]));
      for (const auto& [m, c] : image.terms()) {
        auto it = dst_index.find(m);
        if (it == dst_index.end()) {
          if (p.basis_exact(n + 1, max_weight)) throw ValidationError("differential leaves the enumerated basis");
          continue;
        }
        d(it->second, col) = c;
      }
    }
    out.complex.set_differential(n, std::move(d));
  }
  return out;
}

int auto_weight(const Presentation& p, int lo, int hi, int fallback) {
  int w = 0;
  for (int n = lo - 1; n <= hi + 1; ++n) {
    auto e = p.exact_weight(n);
    if (!e) return fallback;
    w = std::max(w, *e);
  }
  return w;
}

PresentationCohomology presentation_cohomology(const Presentation& p, int lo, int hi, int max_weight, bool reduced) {
  PresentationCohomology out;
  auto first = algebra_complex(p, lo, hi, max_weight, reduced);
  out.report = cohomology(first.complex, lo, hi);
  out.truncation = first.truncation;
  if (!out.truncation.exact) {
    auto second = algebra_complex(p, lo, hi, max_weight + 1, reduced);
    out.truncation.stabilized = cohomology(second.complex, lo, hi).dims() == out.report.dims();
  }
  return out;
}

}  // namespace qdga

#include "qdga/morphism.hpp"

#include "qdga/errors.hpp"

namespace qdga {

Element apply(const PresentationMorphism& f, const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element term = Element::unit();
    for (int g : m) term = f.target.multiply(term, f.images.at(static_cast<std::size_t>(g)));
    out += c * term;
  }
  return out;
}

QVector apply(const FiniteMorphism& f, const Element& e) {
  QVector out = f.target.zero();
  for (const auto& [m, c] : e.terms()) {
    QVector term = f.target.one();
    for (int g : m) term = f.target.multiply(term, f.images.at(static_cast<std::size_t>(g)));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * term[k];
  }
  return out;
}

void validate(const PresentationMorphism& f, bool augmented) {
  if (f.images.size() != f.source.size()) throw ValidationError("morphism needs one image per generator");
  for (int g = 0; g < static_cast<int>(f.source.size()); ++g) {
    const auto& gen = f.source.generator(g);
    const Element& img = f.images[static_cast<std::size_t>(g)];
    auto deg = f.target.degree(img);
    if (deg && *deg != gen.degree)
      throw ValidationError("image of " + gen.name + " has degree " + std::to_string(*deg) + ", expected " +
                            std::to_string(gen.degree));
    if (!deg && !img.is_zero()) throw ValidationError("image of " + gen.name + " is not homogeneous");
    if (apply(f, f.source.differential_of(g)) != f.target.differential(img))
      throw ValidationError("morphism does not commute with d on " + gen.name);
    if (augmented && f.target.augmentation(img) != f.source.augmentation(Element::monomial({g})))
      throw ValidationError("morphism does not preserve the augmentation on " + gen.name);
  }
}

void validate(const FiniteMorphism& f, bool augmented) {
  if (f.images.size() != f.source.size()) throw ValidationError("morphism needs one image per generator");
  for (int g = 0; g < static_cast<int>(f.source.size()); ++g) {
    const auto& gen = f.source.generator(g);
    const QVector& img = f.images[static_cast<std::size_t>(g)];
    if (img.size() != f.target.dim()) throw ValidationError("image of " + gen.name + " has the wrong length");
    auto deg = f.target.degree(img);
    if (deg && *deg != gen.degree) throw ValidationError("image of " + gen.name + " has the wrong degree");
    if (!deg && !is_zero(img)) throw ValidationError("image of " + gen.name + " is not homogeneous");
    if (apply(f, f.source.differential_of(g)) != f.target.differential(img))
      throw ValidationError("morphism does not commute with d on " + gen.name);
    if (augmented && f.target.augmentation(img) != f.source.augmentation(Element::monomial({g})))
      throw ValidationError("morphism does not preserve the augmentation on " + gen.name);
  }
}

ChainMap chain_map(const PresentationMorphism& f, const AlgebraComplex& source, const AlgebraComplex& target) {
  ChainMap out;
  for (const auto& [n, mons] : source.monomials) {
    if (!target.index.count(n)) continue;
    QMatrix m(target.complex.dim(n), mons.size());
    for (std::size_t col = 0; col < mons.size(); ++col) {
      const QVector v = target.coordinates(n, apply(f, Element::monomial(mons[col])));
      for (std::size_t row = 0; row < v.size(); ++row) m(row, col) = v[row];
    }
    out[n] = std::move(m);
  }
  return out;
}

ChainMap chain_map(const FiniteMorphism& f, const AlgebraComplex& source) {
  ChainMap out;
  for (const auto& [n, mons] : source.monomials) {
    const auto rows = f.target.indices_in_degree(n);
    QMatrix m(rows.size(), mons.size());
    for (std::size_t col = 0; col < mons.size(); ++col) {
      const QVector v = apply(f, Element::monomial(mons[col]));
      for (std::size_t row = 0; row < rows.size(); ++row) m(row, col) = v[rows[row]];
    }
    out[n] = std::move(m);
  }
  return out;
}

PresentationMorphism identity_morphism(const Presentation& p) {
  PresentationMorphism f{p, p, {}};
  for (int g = 0; g < static_cast<int>(p.size()); ++g) f.images.push_back(Element::monomial({g}));
  return f;
}

PresentationMorphism compose(const PresentationMorphism& g, const PresentationMorphism& f) {
  PresentationMorphism out{f.source, g.target, {}};
  for (const auto& img : f.images) out.images.push_back(apply(g, img));
  return out;
}

}  // namespace qdga

#pragma once

#include <variant>
#include <vector>

#include "qdga/algebra_complex.hpp"
#include "qdga/finite_algebra.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

/// Algebra map out of a free presentation, fixed by generator images.
struct PresentationMorphism {
  Presentation source;
  Presentation target;
  std::vector<Element> images;
};

struct FiniteMorphism {
  Presentation source;
  FiniteDGAlgebra target;
  std::vector<QVector> images;
};

using DGMorphism = std::variant<PresentationMorphism, FiniteMorphism>;

Element apply(const PresentationMorphism& f, const Element& e);
QVector apply(const FiniteMorphism& f, const Element& e);

/// Degree preservation and f(d g) = d f(g) on generators; with `augmented`
/// also eps(f(g)) = eps(g). Throws ValidationError naming the generator.
void validate(const PresentationMorphism& f, bool augmented);
void validate(const FiniteMorphism& f, bool augmented);

/// Degreewise matrices of f between the two complexes over [lo-1, hi+1].
ChainMap chain_map(const PresentationMorphism& f, const AlgebraComplex& source, const AlgebraComplex& target);
ChainMap chain_map(const FiniteMorphism& f, const AlgebraComplex& source);

PresentationMorphism identity_morphism(const Presentation& p);
PresentationMorphism compose(const PresentationMorphism& g, const PresentationMorphism& f);

}  // namespace qdga

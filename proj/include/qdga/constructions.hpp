#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdga/algebra_complex.hpp"
#include "qdga/morphism.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

struct Abelianization {
  Presentation commutative;
  PresentationMorphism canonical;  // A -> Ab(A), identity on generators
};

/// Same generators, differential renormalized in the commutative flavor.
/// A commutative input is returned unchanged.
Abelianization abelianize(const Presentation& p);

template <class Factor>
struct Factorization {
  Abelianization abelianization;
  Factor factor;  // g : Ab(A) -> S with g o canonical = f
  std::string uniqueness_certificate;
};

/// Factors f : A -> S (S graded-commutative) through Ab(A). Throws
/// ValidationError when f does not kill graded commutators.
Factorization<PresentationMorphism> check_universal_factorization(const PresentationMorphism& f);
Factorization<FiniteMorphism> check_universal_factorization(const FiniteMorphism& f);

/// Free extension K of `base`: the first base.size() generators of K are
/// those of base, with the same differentials.
bool is_free_extension(const Presentation& extension, const Presentation& base);

struct AcyclicClosure {
  Presentation closure;
  std::size_t base_size = 0;
  PresentationCohomology check;  // H(closure) over the window
  bool certified = false;        // check shows Q in degree 0, zero elsewhere, untruncated or stabilized
  int rounds = 0;
};

/// Kills the cohomology of the augmentation ideal degree by degree, lowest
/// first, adjoining a generator y with dy = representative for each class.
/// `fallback_weight` bounds words when the presentation has generators of
/// degree <= 0.
AcyclicClosure acyclic_closure(const Presentation& p, int lo, int hi, int fallback_weight = 8);

struct Pushout {
  Presentation presentation;
  PresentationMorphism leg1;
  PresentationMorphism leg2;
};

/// K1 and K2 glued along their common base A. Associative flavor gives the
/// amalgamated free product, commutative flavor the tensor product over A.
/// Clashing names from K2 get a trailing prime.
Pushout pushout_free_extensions(const Presentation& k1, const Presentation& k2, const Presentation& base);

/// Suspension as the pushout of two copies of the acyclic closure.
struct Suspension {
  AcyclicClosure closure;
  Pushout pushout;
};
Suspension suspension(const Presentation& p, int lo, int hi, int fallback_weight = 8);

/// Morphism from a free extension `source` of `base` into `target`, fixed on
/// base generators by `base_images`, with each new generator sent to a
/// solution u of du = image(d z). Throws ScopeError when no solution exists
/// in the window (target not acyclic there).
PresentationMorphism lift_free_extension(const Presentation& source, std::size_t base_size,
                                         const Presentation& target, std::vector<Element> base_images,
                                         int fallback_weight = 8);

}  // namespace qdga

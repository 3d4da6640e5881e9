#pragma once

#include <map>
#include <vector>

#include "qdga/complex.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

/// Weight bound used for an enumeration together with whether it was binding.
struct Truncation {
  int max_weight = 0;
  bool exact = true;       // no degree lost monomials to the bound
  bool stabilized = true;  // dims unchanged when the bound grows by one
};

/// Underlying cochain complex of a presentation in degrees [lo-1, hi+1],
/// with the monomial basis behind every coordinate. When the weight bound
/// binds, the complex is the quotient by words longer than max_weight.
struct AlgebraComplex {
  CochainComplex complex;
  std::map<int, std::vector<Monomial>> monomials;
  std::map<int, std::map<Monomial, std::size_t, MonomialLess>> index;
  Truncation truncation;

  QVector coordinates(int degree, const Element& e) const;
  Element element(int degree, const QVector& v) const;
};

/// `reduced` drops the unit, giving the augmentation-ideal complex (valid
/// for the default augmentation, where no differential has a constant term).
AlgebraComplex algebra_complex(const Presentation& p, int lo, int hi, int max_weight, bool reduced = false);

/// Weight bound that makes the window exact, or `fallback` when the
/// presentation has generators of degree <= 0.
int auto_weight(const Presentation& p, int lo, int hi, int fallback);

struct PresentationCohomology {
  CohomologyReport report;
  Truncation truncation;
};

/// Cohomology in [lo, hi]; when truncation binds, it is recomputed with
/// max_weight + 1 and the stabilized flag records whether dims moved.
PresentationCohomology presentation_cohomology(const Presentation& p, int lo, int hi, int max_weight,
                                              bool reduced = false);

}  // namespace qdga

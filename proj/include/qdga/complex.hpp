#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdga/linalg.hpp"

namespace qdga {

/// Sparse-by-degree cochain complex over Q. The differential stored at
/// degree n maps degree n to degree n + 1; its matrix has
/// dim(n + 1) rows and dim(n) columns.
class CochainComplex {
 public:
  void set_basis(int degree, std::vector<std::string> labels);
  void set_differential(int degree, QMatrix d);

  bool has_basis(int degree) const { return basis_.count(degree) != 0; }
  std::size_t dim(int degree) const;
  const std::vector<std::string>& labels(int degree) const;

  /// Stored matrix, or a zero matrix when either side is known to be
  /// zero-dimensional. nullopt when the differential is unknown.
  std::optional<QMatrix> differential(int degree) const;

  const std::map<int, std::vector<std::string>>& bases() const { return basis_; }
  const std::map<int, QMatrix>& differentials() const { return differential_; }

  /// First degree n where d^{n+1} d^n != 0, if any.
  std::optional<int> square_zero_violation() const;

 private:
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, QMatrix> differential_;
};

struct DegreeCohomology {
  std::size_t dim = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  /// Cocycles whose classes form a basis of H^n.
  std::vector<QVector> representatives;
  /// Basis of the coboundary space (image of d^{n-1}).
  std::vector<QVector> boundary_basis;
  bool complete = true;
};

struct CohomologyReport {
  int lo = 0;
  int hi = -1;
  std::map<int, DegreeCohomology> degrees;

  std::size_t dim(int degree) const;
  std::map<int, std::size_t> dims() const;
  bool complete() const;
};

/// Cohomology in [lo, hi]. Requires d^n for every n in the window; when
/// d^{n-1} is missing the degree is flagged incomplete, or MissingDifferential
/// is thrown in strict mode.
CohomologyReport cohomology(const CochainComplex& c, int lo, int hi, bool strict = false);

/// Coordinates of the class of a cocycle in the report's representative basis.
QVector class_coordinates(const DegreeCohomology& h, const QVector& cocycle);

struct InducedDegree {
  QMatrix matrix;  // dim H^n(target) x dim H^n(source)
  bool injective = false;
  bool surjective = false;
  std::optional<QMatrix> left_inverse;
};

struct InducedMap {
  CohomologyReport source;
  CohomologyReport target;
  std::map<int, InducedDegree> degrees;

  bool injective() const;
  bool isomorphism() const;
};

using ChainMap = std::map<int, QMatrix>;

/// Verifies f d = d' f on the window (throws ChainMapError) and returns H(f).
InducedMap induced_map_on_cohomology(const CochainComplex& source, const CochainComplex& target,
                                     const ChainMap& f, int lo, int hi);

}  // namespace qdga

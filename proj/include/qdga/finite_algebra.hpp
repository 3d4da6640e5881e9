#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdga/complex.hpp"
#include "qdga/rational.hpp"

namespace qdga {

/// Finite-dimensional DG algebra given by structure constants on a basis
/// of homogeneous elements. Vectors are coordinates in that basis.
class FiniteDGAlgebra {
 public:
  struct BasisElement {
    std::string name;
    int degree = 0;
  };

  FiniteDGAlgebra() = default;
  FiniteDGAlgebra(std::vector<BasisElement> basis, std::size_t unit, bool commutative);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t unit_index() const { return unit_; }
  bool commutative() const { return commutative_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Product of two basis elements. Products involving the unit are fixed
  /// by the unit law and cannot be overridden.
  void set_product(std::size_t i, std::size_t j, QVector value);
  void set_differential(std::size_t i, QVector value);
  void set_augmentation(QVector functional);

  QVector one() const;
  QVector zero() const { return QVector(basis_.size()); }
  QVector basis_vector(std::size_t i) const;

  QVector multiply(const QVector& a, const QVector& b) const;
  QVector differential(const QVector& a) const;
  Rational augmentation(const QVector& a) const;
  const QVector& augmentation_functional() const { return augmentation_; }
  const QVector& product(std::size_t i, std::size_t j) const { return product_[i * basis_.size() + j]; }

  std::vector<std::size_t> indices_in_degree(int degree) const;
  std::optional<int> degree(const QVector& v) const;

  /// Throws ValidationError on any failed law: homogeneity, d^2 = 0, unit,
  /// associativity, Leibniz, graded commutativity (when flagged).
  void validate() const;

  /// True when the augmentation functional is a unital algebra map
  /// vanishing on coboundaries.
  bool augmentation_valid() const;

  int min_degree() const;
  int max_degree() const;

  /// Underlying complex with a basis stored for every degree in [lo, hi].
  CochainComplex complex(int lo, int hi) const;

  /// Position of basis element i inside its degree's block of complex().
  std::size_t local_index(std::size_t i) const;

  std::string format(const QVector& v) const;

  /// Q = Q.1 plus a square-zero ideal: `degree0` classes in degree 0 and
  /// `degree_minus1` classes in degree -1, zero differential.
  static FiniteDGAlgebra square_zero(std::size_t degree0, std::size_t degree_minus1);
  /// H*(S^n) as a formal algebra: 1 and a class in degree n squaring to 0.
  static FiniteDGAlgebra sphere_cohomology(int n);
  static FiniteDGAlgebra ground_field();

 private:
  std::vector<BasisElement> basis_;
  std::size_t unit_ = 0;
  bool commutative_ = false;
  std::vector<QVector> product_;
  std::vector<QVector> differential_;
  QVector augmentation_;
};

}  // namespace qdga

#include "qdga/finite_algebra.hpp"

#include <algorithm>
#include <set>

#include "qdga/errors.hpp"
#include "qdga/expression.hpp"

namespace qdga {

FiniteDGAlgebra::FiniteDGAlgebra(std::vector<BasisElement> basis, std::size_t unit, bool commutative)
    : basis_(std::move(basis)), unit_(unit), commutative_(commutative) {
  const std::size_t n = basis_.size();
  if (unit_ >= n) throw ValidationError("unit index out of range");
  if (basis_[unit_].degree != 0) throw ValidationError("unit must have degree 0");
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b.name).second) throw ValidationError("duplicate basis element '" + b.name + "'");
  product_.assign(n * n, QVector(n));
  differential_.assign(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    product_[unit_ * n + i][i] = 1;
    product_[i * n + unit_][i] = 1;
  }
  augmentation_.assign(n, 0);
  augmentation_[unit_] = 1;
}

std::optional<std::size_t> FiniteDGAlgebra::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

void FiniteDGAlgebra::set_product(std::size_t i, std::size_t j, QVector value) {
  if (i == unit_ || j == unit_) throw ValidationError("products with the unit are fixed by the unit law");
  if (value.size() != dim()) throw ValidationError("product vector has the wrong length");
  product_[i * dim() + j] = std::move(value);
}

void FiniteDGAlgebra::set_differential(std::size_t i, QVector value) {
  if (value.size() != dim()) throw ValidationError("differential vector has the wrong length");
  differential_[i] = std::move(value);
}

void FiniteDGAlgebra::set_augmentation(QVector functional) {
  if (functional.size() != dim()) throw ValidationError("augmentation functional has the wrong length");
  augmentation_ = std::move(functional);
}

QVector FiniteDGAlgebra::one() const { return basis_vector(unit_); }

QVector FiniteDGAlgebra::basis_vector(std::size_t i) const {
  QVector v(dim());
  v.at(i) = 1;
  return v;
}

QVector FiniteDGAlgebra::multiply(const QVector& a, const QVector& b) const {
  const std::size_t n = dim();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const QVector& p = product_[i * n + j];
      const Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

QVector FiniteDGAlgebra::differential(const QVector& a) const {
  const std::size_t n = dim();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!differential_[i][k].is_zero()) out[k] += a[i] * differential_[i][k];
  }
  return out;
}

Rational FiniteDGAlgebra::augmentation(const QVector& a) const {
  Rational total = 0;
  for (std::size_t i = 0; i < dim(); ++i) total += a[i] * augmentation_[i];
  return total;
}

std::vector<std::size_t> FiniteDGAlgebra::indices_in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].degree == degree) out.push_back(i);
  return out;
}

std::optional<int> FiniteDGAlgebra::degree(const QVector& v) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (d && *d != basis_[i].degree) return std::nullopt;
    d = basis_[i].degree;
  }
  return d;
}

namespace {
std::string nonzero_degree_error(const std::string& what) { return what + " is not homogeneous of the expected degree"; }
}  // namespace

void FiniteDGAlgebra::validate() const {
  const std::size_t n = dim();
  auto check_degree = [&](const QVector& v, int expected, const std::string& what) {
    auto d = degree(v);
    if (d && *d != expected) throw ValidationError(nonzero_degree_error(what));
    if (!d && !is_zero(v)) throw ValidationError(nonzero_degree_error(what));
  };
  for (std::size_t i = 0; i < n; ++i) {
    check_degree(differential_[i], basis_[i].degree + 1, "d(" + basis_[i].name + ")");
    if (!is_zero(differential(differential_[i])))
      throw ValidationError("d(d(" + basis_[i].name + ")) is nonzero");
    for (std::size_t j = 0; j < n; ++j)
      check_degree(product_[i * n + j], basis_[i].degree + basis_[j].degree,
                   basis_[i].name + "*" + basis_[j].name);
  }
  if (!is_zero(differential_[unit_])) throw ValidationError("d(1) must vanish");
  for (std::size_t i = 0; i < n; ++i) {
    const QVector ei = basis_vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      const QVector ej = basis_vector(j);
      const QVector ij = multiply(ei, ej);
      // Leibniz: d(xy) = d(x) y + (-1)^{|x|} x d(y)
      QVector rhs = multiply(differential(ei), ej);
      const QVector right = multiply(ei, differential(ej));
      const Rational sign = sign_of_parity(basis_[i].degree);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += sign * right[k];
      if (differential(ij) != rhs)
        throw ValidationError("Leibniz rule fails on " + basis_[i].name + "*" + basis_[j].name);
      if (commutative_) {
        QVector ji = multiply(ej, ei);
        const Rational s = (is_odd(basis_[i].degree) && is_odd(basis_[j].degree)) ? -1 : 1;
        for (auto& x : ji) x *= s;
        if (ij != ji) throw ValidationError("graded commutativity fails on " + basis_[i].name + "*" + basis_[j].name);
      }
      for (std::size_t k = 0; k < n; ++k) {
        const QVector ek = basis_vector(k);
        if (multiply(ij, ek) != multiply(ei, multiply(ej, ek)))
          throw ValidationError("associativity fails on " + basis_[i].name + "*" + basis_[j].name + "*" +
                                basis_[k].name);
      }
    }
  }
}

bool FiniteDGAlgebra::augmentation_valid() const {
  const std::size_t n = dim();
  if (augmentation_[unit_] != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!augmentation_[i].is_zero() && basis_[i].degree != 0) return false;
    if (!augmentation(differential_[i]).is_zero()) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (augmentation(product_[i * n + j]) != augmentation_[i] * augmentation_[j]) return false;
  }
  return true;
}

int FiniteDGAlgebra::min_degree() const {
  int d = 0;
  for (const auto& b : basis_) d = std::min(d, b.degree);
  return d;
}

int FiniteDGAlgebra::max_degree() const {
  int d = 0;
  for (const auto& b : basis_) d = std::max(d, b.degree);
  return d;
}

std::size_t FiniteDGAlgebra::local_index(std::size_t i) const {
  std::size_t k = 0;
  for (std::size_t j = 0; j < i; ++j)
    if (basis_[j].degree == basis_[i].degree) ++k;
  return k;
}

CochainComplex FiniteDGAlgebra::complex(int lo, int hi) const {
  CochainComplex c;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> labels;
    for (auto i : indices_in_degree(n)) labels.push_back(basis_[i].name);
    c.set_basis(n, std::move(labels));
  }
  for (int n = lo; n < hi; ++n) {
    const auto src = indices_in_degree(n);
    const auto dst = indices_in_degree(n + 1);
    QMatrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
      for (std::size_t row = 0; row < dst.size(); ++row) d(row, col) = differential_[src[col]][dst[row]];
    c.set_differential(n, std::move(d));
  }
  return c;
}

std::string FiniteDGAlgebra::format(const QVector& v) const {
  std::string s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += v[i] < 0 ? " - " : " + ";
    else if (v[i] < 0) s += "-";
    Rational mag = abs(v[i]);
    if (mag != 1) s += mag.str() + "*";
    s += basis_[i].name;
  }
  return s.empty() ? "0" : s;
}

FiniteDGAlgebra FiniteDGAlgebra::square_zero(std::size_t degree0, std::size_t degree_minus1) {
  std::vector<BasisElement> basis{{"1", 0}};
  const char* names0[] = {"a", "b", "c", "e", "f", "g"};
  for (std::size_t i = 0; i < degree0; ++i)
    basis.push_back({i < 6 ? names0[i] : "a" + std::to_string(i), 0});
  for (std::size_t i = 0; i < degree_minus1; ++i)
    basis.push_back({degree_minus1 == 1 ? "t" : "t" + std::to_string(i + 1), -1});
  return FiniteDGAlgebra(std::move(basis), 0, true);
}

FiniteDGAlgebra FiniteDGAlgebra::sphere_cohomology(int n) {
  if (n < 1) throw ValidationError("sphere dimension must be positive");
  return FiniteDGAlgebra({{"1", 0}, {"u", n}}, 0, true);
}

FiniteDGAlgebra FiniteDGAlgebra::ground_field() { return FiniteDGAlgebra({{"1", 0}}, 0, true); }

}  // namespace qdga

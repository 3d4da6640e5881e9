#include "qdga/complex.hpp"

#include <stdexcept>

#include "qdga/errors.hpp"
#include "qdga/parallel.hpp"

namespace qdga {

void CochainComplex::set_basis(int degree, std::vector<std::string> labels) {
  basis_[degree] = std::move(labels);
}

void CochainComplex::set_differential(int degree, QMatrix d) {
  if (d.cols() != dim(degree) || d.rows() != dim(degree + 1))
    throw ValidationError("differential d^" + std::to_string(degree) + " has shape " + std::to_string(d.rows()) +
                          "x" + std::to_string(d.cols()) + ", expected " + std::to_string(dim(degree + 1)) + "x" +
                          std::to_string(dim(degree)));
  differential_[degree] = std::move(d);
}

std::size_t CochainComplex::dim(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& CochainComplex::labels(int degree) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

std::optional<QMatrix> CochainComplex::differential(int degree) const {
  auto it = differential_.find(degree);
  if (it != differential_.end()) return it->second;
  const bool src_known = has_basis(degree);
  const bool dst_known = has_basis(degree + 1);
  if ((src_known && dim(degree) == 0) || (dst_known && dim(degree + 1) == 0))
    return QMatrix(dim(degree + 1), dim(degree));
  return std::nullopt;
}

std::optional<int> CochainComplex::square_zero_violation() const {
  for (const auto& [n, d] : differential_) {
    auto next = differential_.find(n + 1);
    if (next == differential_.end()) continue;
    if (!(next->second * d).is_zero()) return n;
  }
  return std::nullopt;
}

std::size_t CohomologyReport::dim(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? 0 : it->second.dim;
}

std::map<int, std::size_t> CohomologyReport::dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [n, h] : degrees) out[n] = h.dim;
  return out;
}

bool CohomologyReport::complete() const {
  for (const auto& [n, h] : degrees)
    if (!h.complete) return false;
  return true;
}

namespace {

DegreeCohomology cohomology_at(const CochainComplex& c, int n, bool strict) {
  auto outgoing = c.differential(n);
  if (!outgoing) throw MissingDifferential(n);
  auto incoming = c.differential(n - 1);
  if (!incoming && strict) throw MissingDifferential(n - 1);

  DegreeCohomology h;
  h.complete = incoming.has_value();
  const std::size_t dim = c.dim(n);
  auto kernel = rank_nullspace(*outgoing);
  h.cocycles = kernel.nullspace.size();

  if (incoming) {
    const auto cols = independent_columns(*incoming);
    for (auto col : cols) h.boundary_basis.push_back(incoming->column(col));
  }
  h.coboundaries = h.boundary_basis.size();

  std::vector<QVector> stacked = h.boundary_basis;
  stacked.insert(stacked.end(), kernel.nullspace.begin(), kernel.nullspace.end());
  const auto chosen = independent_columns(QMatrix::from_columns(dim, stacked));
  for (auto idx : chosen)
    if (idx >= h.boundary_basis.size()) h.representatives.push_back(stacked[idx]);
  h.dim = h.representatives.size();
  if (h.dim + h.coboundaries != h.cocycles)
    throw ValidationError("coboundaries are not cocycles in degree " + std::to_string(n) + " (d^2 != 0)");
  return h;
}

}  // namespace

CohomologyReport cohomology(const CochainComplex& c, int lo, int hi, bool strict) {
  CohomologyReport report;
  report.lo = lo;
  report.hi = hi;
  if (hi < lo) return report;
  std::vector<DegreeCohomology> slots(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(slots.size(), [&](std::size_t i) { slots[i] = cohomology_at(c, lo + static_cast<int>(i), strict); });
  for (std::size_t i = 0; i < slots.size(); ++i) report.degrees[lo + static_cast<int>(i)] = std::move(slots[i]);
  return report;
}

QVector class_coordinates(const DegreeCohomology& h, const QVector& cocycle) {
  std::vector<QVector> cols = h.representatives;
  cols.insert(cols.end(), h.boundary_basis.begin(), h.boundary_basis.end());
  if (cols.empty()) return {};
  auto x = solve(QMatrix::from_columns(cocycle.size(), cols), cocycle);
  if (!x) throw ValidationError("vector is not a cocycle in the span of the cohomology basis");
  x->resize(h.representatives.size());
  return *x;
}

bool InducedMap::injective() const {
  for (const auto& [n, d] : degrees)
    if (!d.injective) return false;
  return true;
}

bool InducedMap::isomorphism() const {
  for (const auto& [n, d] : degrees)
    if (!d.injective || !d.surjective) return false;
  return true;
}

InducedMap induced_map_on_cohomology(const CochainComplex& source, const CochainComplex& target,
                                     const ChainMap& f, int lo, int hi) {
  auto component = [&](int n) -> QMatrix {
    auto it = f.find(n);
    if (it != f.end()) {
      if (it->second.rows() != target.dim(n) || it->second.cols() != source.dim(n))
        throw ValidationError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
      return it->second;
    }
    if (source.dim(n) == 0 || target.dim(n) == 0) return QMatrix(target.dim(n), source.dim(n));
    throw ValidationError("chain map component missing in degree " + std::to_string(n));
  };

  auto has_component = [&](int n) {
    return f.count(n) != 0 || source.dim(n) == 0 || target.dim(n) == 0;
  };

  for (int n = lo - 1; n <= hi; ++n) {
    auto ds = source.differential(n);
    auto dt = target.differential(n);
    if (!ds || !dt || !has_component(n) || !has_component(n + 1)) continue;
    const QMatrix lhs = component(n + 1) * *ds;
    const QMatrix rhs = *dt * component(n);
    if (!(lhs == rhs)) {
      for (std::size_t col = 0; col < lhs.cols(); ++col)
        if (!(lhs.column(col) == rhs.column(col))) throw ChainMapError(n, col, source.labels(n)[col]);
    }
  }

  InducedMap out;
  out.source = cohomology(source, lo, hi);
  out.target = cohomology(target, lo, hi);
  for (int n = lo; n <= hi; ++n) {
    const auto& hs = out.source.degrees.at(n);
    const auto& ht = out.target.degrees.at(n);
    const QMatrix fn = component(n);
    std::vector<QVector> cols;
    for (const auto& rep : hs.representatives) cols.push_back(class_coordinates(ht, fn.apply(rep)));
    InducedDegree d;
    d.matrix = QMatrix::from_columns(ht.dim, cols);
    const std::size_t r = rank(d.matrix);
    d.injective = r == hs.dim;
    d.surjective = r == ht.dim;
    if (d.injective) {
      d.left_inverse = left_inverse(d.matrix);
      if (!d.left_inverse || !(*d.left_inverse * d.matrix == QMatrix::identity(hs.dim)))
        throw ValidationError("left inverse verification failed in degree " + std::to_string(n));
    }
    out.degrees[n] = std::move(d);
  }
  return out;
}

}  // namespace qdga

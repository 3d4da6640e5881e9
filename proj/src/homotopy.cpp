#include "qdga/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qdga/errors.hpp"
#include "qdga/linalg.hpp"

namespace qdga {

namespace {

// Commutative polynomials over Q in integer-labelled unknowns.
using VarMonomial = std::vector<int>;  // sorted, with repetition
using Poly = std::map<VarMonomial, Rational>;
using PolyVec = std::vector<Poly>;  // coordinates in the basis of the target

void add_to(Poly& p, const VarMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly product(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      VarMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      add_to(out, m, ca * cb);
    }
  return out;
}

class Algebra {
 public:
  explicit Algebra(const FiniteDGAlgebra& s) : s_(s) {}

  PolyVec zero() const { return PolyVec(s_.dim()); }
  PolyVec one() const {
    PolyVec v = zero();
    v[s_.unit_index()][{}] = 1;
    return v;
  }

  PolyVec multiply(const PolyVec& a, const PolyVec& b) const {
    PolyVec out = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].empty()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].empty()) continue;
        const QVector& c = s_.product(i, j);
        if (is_zero(c)) continue;
        const Poly ab = product(a[i], b[j]);
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (c[k].is_zero()) continue;
          for (const auto& [m, coeff] : ab) add_to(out[k], m, coeff * c[k]);
        }
      }
    }
    return out;
  }

  PolyVec differential(const PolyVec& a) const {
    PolyVec out = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].empty()) continue;
      const QVector di = s_.differential(s_.basis_vector(i));
      for (std::size_t k = 0; k < di.size(); ++k) {
        if (di[k].is_zero()) continue;
        for (const auto& [m, c] : a[i]) add_to(out[k], m, c * di[k]);
      }
    }
    return out;
  }

  static PolyVec add(PolyVec a, const PolyVec& b, const Rational& scale = 1) {
    for (std::size_t k = 0; k < a.size(); ++k)
      for (const auto& [m, c] : b[k]) add_to(a[k], m, scale * c);
    return a;
  }

 private:
  const FiniteDGAlgebra& s_;
};

// Unknown coordinates of one value per generator, in the target basis of
// the given degree shift.
struct Unknowns {
  std::vector<std::vector<std::size_t>> slots;  // per generator: target basis indices
  std::vector<std::vector<int>> ids;            // per generator: variable ids
  int count = 0;
};

Unknowns allocate(const Presentation& p, const FiniteDGAlgebra& s, int shift, int first_id) {
  Unknowns u;
  u.count = 0;
  for (const auto& g : p.generators()) {
    auto slots = s.indices_in_degree(g.degree + shift);
    std::vector<int> ids;
    for (std::size_t k = 0; k < slots.size(); ++k) ids.push_back(first_id + u.count++);
    u.slots.push_back(std::move(slots));
    u.ids.push_back(std::move(ids));
  }
  return u;
}

PolyVec symbolic_value(const Unknowns& u, int g, std::size_t dim) {
  PolyVec v(dim);
  const auto& slots = u.slots[static_cast<std::size_t>(g)];
  const auto& ids = u.ids[static_cast<std::size_t>(g)];
  for (std::size_t k = 0; k < slots.size(); ++k) v[slots[k]][{ids[k]}] = 1;
  return v;
}

PolyVec evaluate(const Algebra& alg, const std::vector<PolyVec>& images, const Element& e) {
  PolyVec out = alg.zero();
  for (const auto& [m, c] : e.terms()) {
    PolyVec term = alg.one();
    for (int g : m) term = alg.multiply(term, images[static_cast<std::size_t>(g)]);
    out = Algebra::add(std::move(out), term, c);
  }
  return out;
}

std::size_t total_degree(const VarMonomial& m) { return m.size(); }

std::vector<int> dependency_order(const Presentation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> state(static_cast<std::size_t>(n), 0), order;
  std::function<void(int)> visit = [&](int g) {
    auto& st = state[static_cast<std::size_t>(g)];
    if (st == 2) return;
    if (st == 1)
      throw ScopeError("differential of " + p.generator(g).name + " depends on itself; no generator filtration");
    st = 1;
    for (const auto& [m, c] : p.differential_of(g).terms())
      for (int x : m) visit(x);
    st = 2;
    order.push_back(g);
  };
  for (int g = 0; g < n; ++g) visit(g);
  return order;
}

}  // namespace

HomotopyClasses homotopy_classes_into(const Presentation& source, const FiniteDGAlgebra& target, MapMode mode) {
  source.validate();
  target.validate();
  if (mode == MapMode::Augmented && !target.augmentation_valid())
    throw ValidationError("target augmentation is not an algebra map");
  const std::size_t dim = target.dim();
  const Algebra alg(target);
  const int ngen = static_cast<int>(source.size());
  const auto order = dependency_order(source);

  // Maps: unknown f-coordinates, linear constraints d f(x) = f(dx).
  const Unknowns fvars = allocate(source, target, 0, 0);
  std::vector<PolyVec> fsym;
  for (int g = 0; g < ngen; ++g) fsym.push_back(symbolic_value(fvars, g, dim));

  std::vector<std::pair<Poly, std::string>> constraints;
  for (int g = 0; g < ngen; ++g) {
    const auto& name = source.generator(g).name;
    const PolyVec lhs = alg.differential(fsym[static_cast<std::size_t>(g)]);
    const PolyVec rhs = evaluate(alg, fsym, source.differential_of(g));
    const PolyVec diff = Algebra::add(lhs, rhs, -1);
    for (std::size_t k = 0; k < dim; ++k)
      if (!diff[k].empty())
        constraints.emplace_back(diff[k], "d f(" + name + ") = f(d " + name + ") at " + target.basis()[k].name);
    if (mode == MapMode::Augmented) {
      Poly eps;
      for (std::size_t k = 0; k < dim; ++k)
        for (const auto& [m, c] : fsym[static_cast<std::size_t>(g)][k])
          add_to(eps, m, c * target.augmentation_functional()[k]);
      add_to(eps, {}, -source.augmentation(Element::monomial({g})));
      if (!eps.empty()) constraints.emplace_back(eps, "eps f(" + name + ") = eps(" + name + ")");
    }
  }

  const std::size_t nf = static_cast<std::size_t>(fvars.count);
  QMatrix system(constraints.size(), nf);
  QVector rhs(constraints.size());
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    for (const auto& [m, c] : constraints[r].first) {
      if (total_degree(m) > 1) throw ScopeError("nonlinear constraint: " + constraints[r].second);
      if (m.empty())
        rhs[r] = -c;
      else
        system(r, static_cast<std::size_t>(m[0])) = c;
    }
  }
  HomotopyClasses out;
  auto particular = solve(system, rhs);
  if (!particular) {
    out.maps_exist = false;
    return out;
  }
  const auto tangent = rank_nullspace(system).nullspace;
  out.map_space_dimension = tangent.size();

  // Parametrize maps: f = particular + sum_k t_k tangent_k, t ids [0, nt).
  const int nt = static_cast<int>(tangent.size());
  std::vector<PolyVec> fmap;
  for (int g = 0; g < ngen; ++g) {
    PolyVec v(dim);
    const auto& slots = fvars.slots[static_cast<std::size_t>(g)];
    const auto& ids = fvars.ids[static_cast<std::size_t>(g)];
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto j = static_cast<std::size_t>(ids[k]);
      add_to(v[slots[k]], {}, (*particular)[j]);
      for (int t = 0; t < nt; ++t) add_to(v[slots[k]], {t}, tangent[static_cast<std::size_t>(t)][j]);
    }
    fmap.push_back(std::move(v));
  }

  // Homotopies: h-coordinates with ids [nt, nt + nh). g = f - delta, where
  // delta(x) = d h(x) + h(dx) and h is an (f,g)-derivation on words.
  const Unknowns hvars = allocate(source, target, -1, nt);
  std::vector<PolyVec> hsym, gmap(static_cast<std::size_t>(ngen)), delta(static_cast<std::size_t>(ngen));
  for (int g = 0; g < ngen; ++g) hsym.push_back(symbolic_value(hvars, g, dim));

  auto h_of = [&](const Element& e) {
    PolyVec out_h = alg.zero();
    for (const auto& [m, c] : e.terms()) {
      int prefix_degree = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        PolyVec term = alg.one();
        for (std::size_t j = 0; j < i; ++j) term = alg.multiply(term, fmap[static_cast<std::size_t>(m[j])]);
        term = alg.multiply(term, hsym[static_cast<std::size_t>(m[i])]);
        for (std::size_t j = i + 1; j < m.size(); ++j) term = alg.multiply(term, gmap[static_cast<std::size_t>(m[j])]);
        out_h = Algebra::add(std::move(out_h), term, c * sign_of_parity(prefix_degree));
        prefix_degree += source.generator(m[i]).degree;
      }
    }
    return out_h;
  };

  for (int g : order) {
    const auto gi = static_cast<std::size_t>(g);
    delta[gi] = Algebra::add(alg.differential(hsym[gi]), h_of(source.differential_of(g)));
    for (std::size_t k = 0; k < dim; ++k) {
      for (const auto& [m, c] : delta[gi][k]) {
        const bool linear_in_h = m.size() == 1 && m[0] >= nt;
        if (!linear_in_h)
          throw ScopeError("nonlinear homotopy relation: f(" + source.generator(g).name + ") - g(" +
                           source.generator(g).name + ") at " + target.basis()[k].name +
                           " is not linear in the homotopy");
      }
    }
    gmap[gi] = Algebra::add(fmap[gi], delta[gi], -1);
  }

  // delta as a linear map from h-coordinates to f-coordinates.
  const std::size_t nh = static_cast<std::size_t>(hvars.count);
  QMatrix homotopy(nf, nh);
  for (int g = 0; g < ngen; ++g) {
    const auto& slots = fvars.slots[static_cast<std::size_t>(g)];
    const auto& ids = fvars.ids[static_cast<std::size_t>(g)];
    for (std::size_t k = 0; k < slots.size(); ++k)
      for (const auto& [m, c] : delta[static_cast<std::size_t>(g)][slots[k]])
        homotopy(static_cast<std::size_t>(ids[k]), static_cast<std::size_t>(m[0] - nt)) = c;
  }
  if (mode == MapMode::Augmented) {
    // Homotopies of augmented maps satisfy eps h = 0.
    std::vector<QVector> rows;
    for (int g = 0; g < ngen; ++g) {
      QVector row(nh);
      const auto& slots = hvars.slots[static_cast<std::size_t>(g)];
      const auto& ids = hvars.ids[static_cast<std::size_t>(g)];
      for (std::size_t k = 0; k < slots.size(); ++k)
        row[static_cast<std::size_t>(ids[k] - nt)] = target.augmentation_functional()[slots[k]];
      if (!is_zero(row)) rows.push_back(row);
    }
    if (!rows.empty()) {
      const auto allowed = rank_nullspace(QMatrix::from_rows(nh, rows)).nullspace;
      homotopy = homotopy * QMatrix::from_columns(nh, allowed);
    }
  }

  std::vector<QVector> reachable;
  for (auto c : independent_columns(homotopy)) reachable.push_back(homotopy.column(c));
  out.homotopy_rank = reachable.size();

  std::vector<QVector> stacked = reachable;
  stacked.insert(stacked.end(), tangent.begin(), tangent.end());
  const auto basis = independent_columns(QMatrix::from_columns(nf, stacked));
  if (basis.size() != tangent.size())
    throw ValidationError("homotopy directions leave the space of maps");

  auto describe = [&](const QVector& coords) {
    std::string s;
    for (int g = 0; g < ngen; ++g) {
      QVector v(dim);
      const auto& slots = fvars.slots[static_cast<std::size_t>(g)];
      const auto& ids = fvars.ids[static_cast<std::size_t>(g)];
      for (std::size_t k = 0; k < slots.size(); ++k) v[slots[k]] = coords[static_cast<std::size_t>(ids[k])];
      if (!s.empty()) s += ", ";
      s += source.generator(g).name + " -> " + target.format(v);
    }
    return s.empty() ? std::string("(no generators)") : s;
  };
  out.base_point = describe(*particular);
  for (auto idx : basis)
    if (idx >= reachable.size()) out.directions.push_back(describe(stacked[idx]));
  out.dimension = out.directions.size();
  return out;
}

}  // namespace qdga

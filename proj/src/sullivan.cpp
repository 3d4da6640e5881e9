#include "qdga/sullivan.hpp"

#include <set>

#include "qdga/algebra_complex.hpp"
#include "qdga/errors.hpp"
#include "qdga/linalg.hpp"

namespace qdga {

namespace {

// The algebra being modelled, seen through degreewise coordinates: vectors
// are local to one degree block of its complex over [-1, top + 2].
class Target {
 public:
  Target(const SullivanInput& a, int top) : input_(a) {
    if (const auto* p = std::get_if<Presentation>(&a)) {
      if (p->flavor() != Flavor::Commutative) throw ValidationError("minimal model needs a commutative input");
      for (const auto& g : p->generators())
        if (g.degree <= 0) throw ScopeError("minimal model needs generators in positive degrees (" + g.name + ")");
      p->validate();
      cx_ = algebra_complex(*p, 0, top + 1, auto_weight(*p, 0, top + 1, 8));
      complex_ = cx_.complex;
    } else {
      const auto& f = std::get<FiniteDGAlgebra>(a);
      if (!f.commutative()) throw ValidationError("minimal model needs a commutative input");
      if (f.min_degree() < 0) throw ScopeError("minimal model needs a non-negatively graded input");
      f.validate();
      complex_ = f.complex(-1, top + 2);
    }
    report_ = cohomology(complex_, 0, top + 1, true);
  }

  const CochainComplex& complex() const { return complex_; }
  const CohomologyReport& report() const { return report_; }

  QVector unit() const {
    if (std::holds_alternative<Presentation>(input_)) return cx_.coordinates(0, Element::unit());
    const auto& f = std::get<FiniteDGAlgebra>(input_);
    return local(0, f.one());
  }

  QVector multiply(int da, const QVector& a, int db, const QVector& b) const {
    if (const auto* p = std::get_if<Presentation>(&input_))
      return cx_.coordinates(da + db, p->multiply(cx_.element(da, a), cx_.element(db, b)));
    const auto& f = std::get<FiniteDGAlgebra>(input_);
    return local(da + db, f.multiply(global(da, a), global(db, b)));
  }

  DGMorphism morphism(const Presentation& model, const std::vector<std::pair<int, QVector>>& images) const {
    if (const auto* p = std::get_if<Presentation>(&input_)) {
      PresentationMorphism m{model, *p, {}};
      for (const auto& [d, v] : images) m.images.push_back(cx_.element(d, v));
      return m;
    }
    const auto& f = std::get<FiniteDGAlgebra>(input_);
    FiniteMorphism m{model, f, {}};
    for (const auto& [d, v] : images) m.images.push_back(global(d, v));
    return m;
  }

 private:
  QVector local(int degree, const QVector& g) const {
    const auto& f = std::get<FiniteDGAlgebra>(input_);
    QVector out;
    for (std::size_t i : f.indices_in_degree(degree)) out.push_back(g[i]);
    return out;
  }
  QVector global(int degree, const QVector& l) const {
    const auto& f = std::get<FiniteDGAlgebra>(input_);
    QVector out = f.zero();
    const auto idx = f.indices_in_degree(degree);
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = l[k];
    return out;
  }

  SullivanInput input_;
  AlgebraComplex cx_;
  CochainComplex complex_;
  CohomologyReport report_;
};

std::string generator_name(std::size_t k) {
  const std::string letter(1, static_cast<char>('a' + k % 26));
  return k < 26 ? letter : letter + std::to_string(k / 26);
}

Presentation extend(const Presentation& p, const std::vector<Generator>& gens, const std::vector<Element>& diffs) {
  auto all = p.generators();
  all.insert(all.end(), gens.begin(), gens.end());
  Presentation out(Flavor::Commutative, all);
  for (int g = 0; g < static_cast<int>(p.size()); ++g) out.set_differential(g, p.differential_of(g));
  for (std::size_t i = 0; i < gens.size(); ++i) out.set_differential(static_cast<int>(p.size() + i), diffs[i]);
  return out;
}

class Builder {
 public:
  explicit Builder(const Target& t) : t_(t), model_(Flavor::Commutative, {}) {}

  const Presentation& model() const { return model_; }
  const std::vector<std::pair<int, QVector>>& images() const { return images_; }

  QVector image(int degree, const Element& e) const {
    QVector out(t_.complex().dim(degree));
    for (const auto& [m, c] : e.terms()) {
      QVector term = t_.unit();
      int d = 0;
      for (int g : m) {
        const auto& [dg, v] = images_[static_cast<std::size_t>(g)];
        term = t_.multiply(d, term, dg, v);
        d += dg;
      }
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * term[k];
    }
    return out;
  }

  // Classes of H^n(target) not hit by H^n(model), first in basis order.
  void cover(int n) {
    const auto& target_h = t_.report().degrees.at(n);
    const auto ax = complex_at(n);
    const auto h = cohomology(ax.complex, n, n).degrees.at(n);
    std::vector<QVector> hit;
    for (const auto& rep : h.representatives)
      hit.push_back(class_coordinates(target_h, image(n, ax.element(n, rep))));
    std::size_t r = rank(QMatrix::from_columns(target_h.dim, hit));
    std::vector<Generator> gens;
    std::vector<Element> diffs;
    std::vector<std::pair<int, QVector>> imgs;
    for (std::size_t j = 0; j < target_h.dim; ++j) {
      QVector e(target_h.dim);
      e[j] = 1;
      hit.push_back(e);
      const std::size_t r2 = rank(QMatrix::from_columns(target_h.dim, hit));
      if (r2 == r) {
        hit.pop_back();
        continue;
      }
      r = r2;
      gens.push_back({generator_name(model_.size() + gens.size()), n});
      diffs.emplace_back();
      imgs.emplace_back(n, target_h.representatives[j]);
    }
    add(gens, diffs, imgs);
  }

  // Generators of degree n with dw = z for each class z in the kernel of
  // H^{n+1}(model) -> H^{n+1}(target).
  bool kill(int n) {
    const auto& target_h = t_.report().degrees.at(n + 1);
    const auto ax = complex_at(n + 1);
    const auto h = cohomology(ax.complex, n + 1, n + 1).degrees.at(n + 1);
    std::vector<QVector> cols;
    for (const auto& rep : h.representatives)
      cols.push_back(class_coordinates(target_h, image(n + 1, ax.element(n + 1, rep))));
    const auto kernel = rank_nullspace(QMatrix::from_columns(target_h.dim, cols)).nullspace;
    if (kernel.empty()) return false;
    const QMatrix dn = *t_.complex().differential(n);
    std::vector<Generator> gens;
    std::vector<Element> diffs;
    std::vector<std::pair<int, QVector>> imgs;
    for (const auto& c : kernel) {
      QVector z(ax.complex.dim(n + 1));
      for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += c[k] * h.representatives[k][i];
      const Element ze = ax.element(n + 1, z);
      auto a = solve(dn, image(n + 1, ze));
      if (!a) throw ValidationError("kernel class in degree " + std::to_string(n + 1) + " has no primitive");
      gens.push_back({generator_name(model_.size() + gens.size()), n});
      diffs.push_back(ze);
      imgs.emplace_back(n, std::move(*a));
    }
    add(gens, diffs, imgs);
    return true;
  }

 private:
  AlgebraComplex complex_at(int n) const { return algebra_complex(model_, n, n, auto_weight(model_, n, n, 1)); }

  void add(const std::vector<Generator>& gens, const std::vector<Element>& diffs,
           const std::vector<std::pair<int, QVector>>& imgs) {
    if (gens.empty()) return;
    model_ = extend(model_, gens, diffs);
    images_.insert(images_.end(), imgs.begin(), imgs.end());
  }

  const Target& t_;
  Presentation model_;
  std::vector<std::pair<int, QVector>> images_;
};

InducedMap check_map(const DGMorphism& map, const Presentation& model, int top) {
  const auto src = algebra_complex(model, 0, top, auto_weight(model, 0, top, 1));
  if (const auto* f = std::get_if<PresentationMorphism>(&map)) {
    validate(*f, false);
    const auto tgt = algebra_complex(f->target, 0, top, auto_weight(f->target, 0, top, 8));
    return induced_map_on_cohomology(src.complex, tgt.complex, chain_map(*f, src, tgt), 0, top);
  }
  const auto& f = std::get<FiniteMorphism>(map);
  validate(f, false);
  return induced_map_on_cohomology(src.complex, f.target.complex(-1, top + 2), chain_map(f, src), 0, top);
}

}  // namespace

bool is_minimal(const Presentation& p) {
  for (int g = 0; g < static_cast<int>(p.size()); ++g)
    for (const auto& [m, c] : p.differential_of(g).terms())
      if (m.size() < 2) return false;
  return true;
}

SullivanModel minimal_model(const SullivanInput& a, int top) {
  if (top < 2) throw ScopeError("minimal model window must reach degree 2");
  SullivanModel out;
  out.top = top;
  if (const auto* p = std::get_if<Presentation>(&a)) {
    bool ready = p->flavor() == Flavor::Commutative && is_minimal(*p);
    for (const auto& g : p->generators()) ready = ready && g.degree >= 2;
    if (ready) {
      p->validate();
      out.model = *p;
      out.map = identity_morphism(*p);
      out.minimal = true;
      out.check = check_map(out.map, out.model, top);
      return out;
    }
  }
  const Target target(a, top);
  if (target.report().dim(0) != 1)
    throw ValidationError("degree 0: H^0 has dimension " + std::to_string(target.report().dim(0)) + ", expected 1");
  if (target.report().dim(1) != 0) throw ValidationError("degree 1: H^1 is nonzero; input is not simply connected");

  Builder b(target);
  for (int n = 2; n <= top; ++n) {
    b.cover(n);
    for (int guard = 0; b.kill(n); ++guard)
      if (guard > top) throw ScopeError("kernel in degree " + std::to_string(n + 1) + " does not die");
  }
  out.model = b.model();
  out.model.validate();
  out.map = target.morphism(out.model, b.images());
  out.minimal = is_minimal(out.model);
  out.check = check_map(out.map, out.model, top);
  if (!out.minimal) throw ValidationError("constructed model is not minimal");
  if (!out.check.isomorphism()) throw ValidationError("constructed model is not a quasi-isomorphism in the window");
  return out;
}

std::map<int, std::size_t> homotopy_groups(const SullivanModel& m) {
  std::map<int, std::size_t> out;
  for (int i = 2; i <= m.top; ++i) out[i] = 0;
  for (const auto& g : m.model.generators())
    if (g.degree >= 2 && g.degree <= m.top) ++out[g.degree];
  return out;
}

CohomologyReport loop_cohomology(const SullivanModel& m, int lo, int hi) { return bar_cohomology(m.model, lo, hi).report; }

Presentation sphere_model(int n) {
  if (n < 2) throw ValidationError("sphere presets start at S2");
  if (is_odd(n)) return Presentation(Flavor::Commutative, {{"x", n}});
  Presentation p(Flavor::Commutative, {{"a", n}, {"b", 2 * n - 1}});
  p.set_differential("b", "a^2");
  return p;
}

Presentation tensor_models(const Presentation& x, const Presentation& y) {
  auto gens = x.generators();
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.name);
  for (auto g : y.generators()) {
    while (names.count(g.name)) g.name += "'";
    names.insert(g.name);
    gens.push_back(g);
  }
  Presentation out(Flavor::Commutative, gens);
  const int shift = static_cast<int>(x.size());
  for (int g = 0; g < shift; ++g) out.set_differential(g, x.differential_of(g));
  for (int g = 0; g < static_cast<int>(y.size()); ++g) {
    Element e;
    for (const auto& [m, c] : y.differential_of(g).terms()) {
      Monomial shifted;
      for (int i : m) shifted.push_back(i + shift);
      e.add_term(shifted, c);
    }
    out.set_differential(g + shift, e);
  }
  out.validate();
  return out;
}

namespace {

Presentation preset_model(const std::string& name) {
  if (name == "point") return Presentation(Flavor::Commutative, {});
  const auto cross = name.find('x', 1);
  if (cross != std::string::npos) return tensor_models(preset_model(name.substr(0, cross)), preset_model(name.substr(cross + 1)));
  if (name.size() >= 2 && name[0] == 'S' && name.find_first_not_of("0123456789", 1) == std::string::npos)
    return sphere_model(std::stoi(name.substr(1)));
  throw ValidationError("unknown space preset '" + name + "'");
}

}  // namespace

SullivanModel space_preset(const std::string& name, int top) {
  SullivanModel m;
  m.model = preset_model(name);
  m.top = top;
  m.map = identity_morphism(m.model);
  m.minimal = is_minimal(m.model);
  m.check = check_map(m.map, m.model, top);
  return m;
}

}  // namespace qdga

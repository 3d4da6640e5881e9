#include "qdga/scenarios.hpp"

#include <algorithm>

#include "qdga/bar.hpp"
#include "qdga/constructions.hpp"
#include "qdga/errors.hpp"
#include "qdga/harrison.hpp"
#include "qdga/hochschild.hpp"
#include "qdga/homotopy.hpp"
#include "qdga/morphism.hpp"
#include "qdga/sullivan.hpp"

namespace qdga {

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string describe(const Presentation& p) {
  std::string s = to_string(p.flavor()) + "; generators:";
  for (const auto& g : p.generators()) s += " " + g.name + ":" + std::to_string(g.degree);
  for (int g = 0; g < static_cast<int>(p.size()); ++g)
    if (!p.differential_of(g).is_zero()) s += "; d " + p.generator(g).name + " = " + p.format(p.differential_of(g));
  return s;
}

std::string describe(const FiniteDGAlgebra& s) {
  std::string out = std::string(s.commutative() ? "commutative" : "associative") + "; basis:";
  for (const auto& b : s.basis()) out += " " + b.name + ":" + std::to_string(b.degree);
  return out;
}

std::string window(int lo, int hi) { return std::to_string(lo) + ":" + std::to_string(hi); }

}  // namespace

Presentation lurie_commutative_source() { return Presentation(Flavor::Commutative, {{"x", 0}, {"y", 0}}); }

Presentation lurie_associative_source() {
  Presentation p(Flavor::Associative, {{"x", 0}, {"y", 0}, {"z", -1}});
  p.set_differential("z", "x*y - y*x");
  return p;
}

Report verify_lurie(const FiniteDGAlgebra& s) {
  if (!s.commutative()) throw ValidationError("the Lurie target must be graded-commutative");
  s.validate();
  Report r;
  r.scenario = "lurie";
  r.inputs["target"] = describe(s);
  const auto h = cohomology(s.complex(std::min(s.min_degree(), -1) - 1, std::max(s.max_degree(), 0) + 1), -1, 0);
  r.tables.push_back(cohomology_table("cohomology of the target", h));
  const std::size_t h0 = h.dim(0), h1 = h.dim(-1);

  const auto comm = homotopy_classes_into(lurie_commutative_source(), s, MapMode::Unaugmented);
  const auto assoc = homotopy_classes_into(lurie_associative_source(), s, MapMode::Unaugmented);
  Table t{"homotopy classes of maps", {"source", "maps_exist", "dim V", "dim W", "dim pi0", "formula", "expected"}, {}};
  t.rows.push_back({describe(lurie_commutative_source()), yes(comm.maps_exist), std::to_string(comm.map_space_dimension),
                    std::to_string(comm.homotopy_rank), std::to_string(comm.dimension), "2 dim H^0",
                    std::to_string(2 * h0)});
  t.rows.push_back({describe(lurie_associative_source()), yes(assoc.maps_exist),
                    std::to_string(assoc.map_space_dimension), std::to_string(assoc.homotopy_rank),
                    std::to_string(assoc.dimension), "2 dim H^0 + dim H^-1", std::to_string(2 * h0 + h1)});
  r.tables.push_back(std::move(t));
  r.verdicts.push_back({"commutative pi0 = 2 dim H^0", comm.maps_exist && comm.dimension == 2 * h0,
                        std::to_string(comm.dimension) + " vs " + std::to_string(2 * h0)});
  r.verdicts.push_back({"associative pi0 = 2 dim H^0 + dim H^-1", assoc.maps_exist && assoc.dimension == 2 * h0 + h1,
                        std::to_string(assoc.dimension) + " vs " + std::to_string(2 * h0 + h1)});
  return r;
}

Report verify_retract(const Presentation& a, int lo, int hi) {
  if (a.flavor() != Flavor::Associative) throw ValidationError("the retract scenario needs an associative presentation");
  Report r;
  r.scenario = "retract";
  r.inputs["algebra"] = describe(a);
  r.inputs["window"] = window(lo, hi);

  // Associative side: Sigma A from two copies of the closure K, then Ab.
  const Suspension sigma = suspension(a, lo, hi);
  if (!sigma.closure.certified) throw ScopeError("associative acyclic closure is not certified on the window");
  const Presentation ab_sigma = abelianize(sigma.pushout.presentation).commutative;
  const Presentation ab_k = abelianize(sigma.closure.closure).commutative;

  // Commutative side: B[Ab A] from two copies of the commutative closure L.
  const Presentation ab_a = abelianize(a).commutative;
  const AcyclicClosure l = acyclic_closure(ab_a, lo, hi + 1);
  if (!l.certified) throw ScopeError("commutative acyclic closure is not certified on the window");
  const Pushout b = pushout_free_extensions(l.closure, l.closure, ab_a);

  // L -> Ab(K) over Ab(A), then both abelianized legs into Ab(Sigma A).
  std::vector<Element> base;
  for (std::size_t g = 0; g < ab_a.size(); ++g) base.push_back(Element::monomial({static_cast<int>(g)}));
  const PresentationMorphism phi = lift_free_extension(l.closure, ab_a.size(), ab_k, base);
  auto abelian_leg = [&](const PresentationMorphism& leg) {
    PresentationMorphism out{ab_k, ab_sigma, {}};
    for (const auto& img : leg.images) out.images.push_back(ab_sigma.normalize(img));
    validate(out, false);
    return out;
  };
  const auto leg1 = abelian_leg(sigma.pushout.leg1);
  const auto leg2 = abelian_leg(sigma.pushout.leg2);
  PresentationMorphism u{b.presentation, ab_sigma, {}};
  const std::size_t nb = ab_a.size(), nl = l.closure.size();
  for (std::size_t g = 0; g < nb; ++g) u.images.push_back(Element::monomial({static_cast<int>(g)}));
  for (std::size_t g = nb; g < nl; ++g) u.images.push_back(apply(leg1, phi.images[g]));
  for (std::size_t g = nb; g < nl; ++g) u.images.push_back(apply(leg2, phi.images[g]));
  validate(u, false);

  const auto src = algebra_complex(b.presentation, lo, hi, auto_weight(b.presentation, lo, hi, 8));
  const auto tgt = algebra_complex(ab_sigma, lo, hi, auto_weight(ab_sigma, lo, hi, 8));
  const auto h = induced_map_on_cohomology(src.complex, tgt.complex, chain_map(u, src, tgt), lo, hi);

  r.inputs["B[Ab A]"] = describe(b.presentation);
  r.inputs["Ab(Sigma A)"] = describe(ab_sigma);
  std::string images;
  for (std::size_t g = 0; g < u.images.size(); ++g)
    images += (g ? "; " : "") + b.presentation.generator(static_cast<int>(g)).name + " -> " + ab_sigma.format(u.images[g]);
  r.inputs["u_c"] = images;

  Table t{"H(u_c)", {"degree", "dim H(B[Ab A])", "dim H(Ab Sigma A)", "matrix", "injective", "left inverse"}, {}};
  bool injective = true;
  for (const auto& [n, d] : h.degrees) {
    t.rows.push_back({std::to_string(n), std::to_string(h.source.dim(n)), std::to_string(h.target.dim(n)),
                      matrix_to_string(d.matrix), yes(d.injective),
                      d.left_inverse ? matrix_to_string(*d.left_inverse) : "-"});
    injective = injective && d.injective;
  }
  r.tables.push_back(std::move(t));
  r.truncation.push_back({"B[Ab A]", src.truncation});
  r.truncation.push_back({"Ab(Sigma A)", tgt.truncation});
  r.truncation.push_back({"associative closure", sigma.closure.check.truncation});
  r.truncation.push_back({"commutative closure", l.check.truncation});
  r.verdicts.push_back({"acyclic closures certified", sigma.closure.certified && l.certified,
                        "rounds " + std::to_string(sigma.closure.rounds) + ", " + std::to_string(l.rounds)});
  r.verdicts.push_back({"H(u_c) injective on " + window(lo, hi), injective, "left inverses in table H(u_c)"});
  return r;
}

namespace {

void aq_table(Report& r, const AqHhMap& m) {
  Table t{"AQ^{-i} -> HH^{-i+1}", {"i", "internal degree", "dim AQ", "dim HH", "injective", "left inverse"}, {}};
  for (const auto& s : m.spots)
    t.rows.push_back({std::to_string(s.i), std::to_string(s.internal_degree), std::to_string(s.aq_dim),
                      std::to_string(s.hh_dim), yes(s.injective), s.left_inverse ? matrix_to_string(*s.left_inverse) : "-"});
  r.tables.push_back(std::move(t));
  r.truncation.push_back({"Harrison and Hochschild cochains", m.harrison.truncation});
}

}  // namespace

Report verify_aq_hh_injectivity(const Presentation& ring, int lo, int hi) {
  Report r;
  r.scenario = "injectivity";
  r.inputs["algebra"] = describe(ring);
  r.inputs["window"] = window(lo, hi);
  const int i_lo = std::max(2, lo);
  if (i_lo > hi) {
    r.verdicts.push_back({"AQ -> HH injective", true, "no i > 1 in the window"});
    return r;
  }
  const auto m = aq_to_hh_map(ring, i_lo, hi);
  aq_table(r, m);
  std::string failing;
  for (const auto& s : m.spots)
    if (!s.injective) failing += (failing.empty() ? "" : ",") + std::to_string(s.i);
  r.verdicts.push_back({"AQ -> HH injective for " + std::to_string(i_lo) + " <= i <= " + std::to_string(hi),
                        failing.empty(), failing.empty() ? "left inverses in table" : "fails at i = " + failing});
  r.verdicts.push_back({"truncation stabilized", m.harrison.truncation.exact || m.harrison.truncation.stabilized,
                        "max_weight " + std::to_string(m.harrison.truncation.max_weight)});
  return r;
}

Report verify_pi_in_loop(const std::string& space, int lo, int hi) {
  Report r;
  r.scenario = "pi-in-loop";
  r.inputs["space"] = space;
  r.inputs["window"] = window(lo, hi);
  const SullivanModel m = space_preset(space, hi);
  r.inputs["model"] = describe(m.model);
  const auto loop = bar_cohomology(m.model, lo, hi);
  r.tables.push_back(cohomology_table("H*(Omega X)", loop.report));
  r.truncation.push_back({"bar complex", loop.truncation});
  const auto pi = homotopy_groups(m);

  Table t{"pi_i against H^{i-1}(Omega X)", {"i", "dim pi_i", "dim H^{i-1}", "holds"}, {}};
  bool holds = true;
  const int i_lo = std::max(2, lo + 1);
  for (int i = i_lo; i <= hi && i - 1 <= hi; ++i) {
    const std::size_t p = pi.count(i) ? pi.at(i) : 0;
    const std::size_t l = loop.report.dim(i - 1);
    t.rows.push_back({std::to_string(i), std::to_string(p), std::to_string(l), yes(p <= l)});
    holds = holds && p <= l;
  }
  r.tables.push_back(std::move(t));
  r.verdicts.push_back({"dim pi_i <= dim H^{i-1}(Omega X)", holds, "table pi_i against H^{i-1}(Omega X)"});
  r.verdicts.push_back({"model is minimal and certified", m.minimal && m.check.isomorphism(),
                        "through degree " + std::to_string(hi)});

  if (i_lo <= hi) {
    const auto aq = aq_to_hh_map(m.model, i_lo, hi);
    aq_table(r, aq);
    bool inj = true, match = true;
    for (const auto& s : aq.spots) {
      inj = inj && s.injective;
      match = match && s.aq_dim == (pi.count(s.i) ? pi.at(s.i) : 0);
    }
    r.verdicts.push_back({"Harrison part injects at matching spots", inj, "table AQ^{-i} -> HH^{-i+1}"});
    r.verdicts.push_back({"dim AQ^{-i} = dim pi_i", match, "generator counts against Harrison cohomology"});
  }
  return r;
}

Report verify_duality(const Presentation& ring, int lo, int hi) {
  Report r;
  r.scenario = "duality";
  r.inputs["algebra"] = describe(ring);
  r.inputs["window"] = window(lo, hi);
  const auto hh = hochschild_trivial_coefficients(ring, lo, hi);
  const auto bar = bar_cohomology(ring, lo, hi, hh.truncation.max_weight);
  Table t{"Hochschild duality", {"n", "dim HH_n", "dim HH^{-n}", "dim bar H^n"}, {}};
  bool dual = true, cross = true;
  for (int n = lo; n <= hi; ++n) {
    const auto c = hh.homology.dim(n), d = hh.cohomology.dim(-n), b = bar.report.dim(n);
    t.rows.push_back({std::to_string(n), std::to_string(c), std::to_string(d), std::to_string(b)});
    dual = dual && c == d;
    cross = cross && c == b;
  }
  r.tables.push_back(std::move(t));
  r.truncation.push_back({"Hochschild complex", hh.truncation});
  r.truncation.push_back({"bar complex", bar.truncation});
  r.verdicts.push_back({"dim HH^{-n} = dim HH_n", dual, "table Hochschild duality"});
  r.verdicts.push_back({"Hochschild homology = bar cohomology", cross, "independent assemblies"});
  return r;
}

}  // namespace qdga

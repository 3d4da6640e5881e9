#include "qdga/constructions.hpp"

#include <set>

#include "qdga/errors.hpp"

namespace qdga {

Abelianization abelianize(const Presentation& p) {
  Presentation ab = p.flavor() == Flavor::Commutative ? p : as_commutative(p);
  ab.validate();
  PresentationMorphism can{p, ab, {}};
  for (int g = 0; g < static_cast<int>(p.size()); ++g) can.images.push_back(Element::monomial({g}));
  return {std::move(ab), std::move(can)};
}

namespace {

// f(a) f(b) - (-1)^{|a||b|} f(b) f(a) must vanish for all generator pairs,
// including a = b (odd squares die in Ab(A)).
template <class Mul, class Img>
void check_commutators(const Presentation& source, const Mul& mul, const Img& image) {
  for (int a = 0; a < static_cast<int>(source.size()); ++a) {
    for (int b = a; b < static_cast<int>(source.size()); ++b) {
      const int da = source.generator(a).degree;
      const int db = source.generator(b).degree;
      const bool odd = is_odd(da) && is_odd(db);
      if (!mul(image(a), image(b), image(b), odd))
        throw ValidationError("morphism does not kill the graded commutator of " + source.generator(a).name +
                              " and " + source.generator(b).name);
    }
  }
}

const char* kCertificate =
    "Ab(A) is generated by the images of the generators of A under the canonical map, so g is forced on "
    "generators: g(x) = f(x) for every generator x";

}  // namespace

Factorization<PresentationMorphism> check_universal_factorization(const PresentationMorphism& f) {
  if (f.source.flavor() != Flavor::Associative) throw ValidationError("factorization expects an associative source");
  if (f.target.flavor() != Flavor::Commutative) throw ValidationError("factorization expects a commutative target");
  validate(f, false);
  check_commutators(
      f.source,
      [&](const Element& x, const Element& y, const Element& y2, bool odd) {
        Element lhs = f.target.multiply(x, y);
        Element rhs = f.target.multiply(y2, x);
        return lhs == (odd ? Rational(-1) : Rational(1)) * rhs;
      },
      [&](int g) { return f.images[static_cast<std::size_t>(g)]; });
  Factorization<PresentationMorphism> out{abelianize(f.source), {}, kCertificate};
  out.factor = PresentationMorphism{out.abelianization.commutative, f.target, f.images};
  validate(out.factor, false);
  const auto composite = compose(out.factor, out.abelianization.canonical);
  if (composite.images != f.images) throw ValidationError("factorization does not reproduce f");
  return out;
}

Factorization<FiniteMorphism> check_universal_factorization(const FiniteMorphism& f) {
  if (f.source.flavor() != Flavor::Associative) throw ValidationError("factorization expects an associative source");
  if (!f.target.commutative()) throw ValidationError("factorization expects a commutative target");
  validate(f, false);
  check_commutators(
      f.source,
      [&](const QVector& x, const QVector& y, const QVector& y2, bool odd) {
        QVector lhs = f.target.multiply(x, y);
        QVector rhs = f.target.multiply(y2, x);
        if (odd)
          for (auto& c : rhs) c = -c;
        return lhs == rhs;
      },
      [&](int g) { return f.images[static_cast<std::size_t>(g)]; });
  Factorization<FiniteMorphism> out{abelianize(f.source), {}, kCertificate};
  out.factor = FiniteMorphism{out.abelianization.commutative, f.target, f.images};
  validate(out.factor, false);
  for (int g = 0; g < static_cast<int>(f.source.size()); ++g) {
    const Element via = apply(out.abelianization.canonical, Element::monomial({g}));
    if (apply(out.factor, via) != f.images[static_cast<std::size_t>(g)])
      throw ValidationError("factorization does not reproduce f");
  }
  return out;
}

bool is_free_extension(const Presentation& extension, const Presentation& base) {
  if (extension.flavor() != base.flavor() || extension.size() < base.size()) return false;
  for (int g = 0; g < static_cast<int>(base.size()); ++g) {
    if (!(extension.generator(g) == base.generator(g))) return false;
    if (extension.differential_of(g) != base.differential_of(g)) return false;
  }
  return true;
}

namespace {

std::string fresh_name(const Presentation& p, const std::vector<Generator>& pending, int& counter) {
  auto taken = [&](const std::string& n) {
    if (p.find(n)) return true;
    for (const auto& g : pending)
      if (g.name == n) return true;
    return false;
  };
  std::string name;
  do {
    name = "y" + std::to_string(++counter);
  } while (taken(name));
  return name;
}

Presentation with_generators(const Presentation& p, const std::vector<Generator>& extra,
                             const std::vector<Element>& extra_differentials) {
  auto gens = p.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  Presentation out(p.flavor(), gens, p.order());
  for (int g = 0; g < static_cast<int>(p.size()); ++g) out.set_differential(g, p.differential_of(g));
  for (std::size_t i = 0; i < extra.size(); ++i)
    out.set_differential(static_cast<int>(p.size() + i), extra_differentials[i]);
  for (const auto& [g, v] : p.augmentation_overrides()) out.set_augmentation(g, v);
  return out;
}

}  // namespace

AcyclicClosure acyclic_closure(const Presentation& p, int lo, int hi, int fallback_weight) {
  p.validate();
  if (!p.has_default_augmentation()) throw ScopeError("acyclic closure needs the default augmentation");
  AcyclicClosure out;
  out.base_size = p.size();
  Presentation k = p;
  int counter = 0;
  const int max_rounds = 2 * (hi - lo + 2);
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (int n = lo; n <= hi; ++n) {
      const int w = auto_weight(k, n, n, fallback_weight);
      const auto cx = algebra_complex(k, n, n, w, /*reduced=*/true);
      const auto h = cohomology(cx.complex, n, n);
      const auto& reps = h.degrees.at(n).representatives;
      if (reps.empty()) continue;
      std::vector<Generator> gens;
      std::vector<Element> diffs;
      for (const auto& rep : reps) {
        gens.push_back({fresh_name(k, gens, counter), n - 1});
        diffs.push_back(cx.element(n, rep));
      }
      k = with_generators(k, gens, diffs);
      changed = true;
    }
    out.rounds = round + 1;
    if (!changed) break;
  }
  k.validate();
  out.check = presentation_cohomology(k, lo, hi, auto_weight(k, lo, hi, fallback_weight));
  bool acyclic = true;
  for (int n = lo; n <= hi; ++n) acyclic = acyclic && out.check.report.dim(n) == (n == 0 ? 1u : 0u);
  out.certified = acyclic && out.check.report.complete() && out.check.truncation.stabilized;
  out.closure = std::move(k);
  return out;
}

Pushout pushout_free_extensions(const Presentation& k1, const Presentation& k2, const Presentation& base) {
  if (k1.flavor() != k2.flavor()) throw ValidationError("pushout legs have different flavors");
  if (!is_free_extension(k1, base) || !is_free_extension(k2, base))
    throw ValidationError("pushout legs must be free extensions of the same base");
  const std::size_t nb = base.size();
  auto gens = base.generators();
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.name);
  for (std::size_t i = nb; i < k1.size(); ++i) {
    gens.push_back(k1.generators()[i]);
    names.insert(k1.generators()[i].name);
  }
  for (std::size_t i = nb; i < k2.size(); ++i) {
    Generator g = k2.generators()[i];
    while (names.count(g.name)) g.name += "'";
    names.insert(g.name);
    gens.push_back(g);
  }
  Presentation out(k1.flavor(), gens, k1.order());

  PresentationMorphism leg1{k1, out, {}};
  PresentationMorphism leg2{k2, out, {}};
  for (std::size_t i = 0; i < k1.size(); ++i) leg1.images.push_back(Element::monomial({static_cast<int>(i)}));
  for (std::size_t i = 0; i < k2.size(); ++i) {
    const int target = i < nb ? static_cast<int>(i) : static_cast<int>(k1.size() + i - nb);
    leg2.images.push_back(Element::monomial({target}));
  }
  for (std::size_t i = 0; i < k1.size(); ++i)
    out.set_differential(static_cast<int>(i), k1.differential_of(static_cast<int>(i)));
  for (std::size_t i = nb; i < k2.size(); ++i)
    out.set_differential(static_cast<int>(k1.size() + i - nb), apply(leg2, k2.differential_of(static_cast<int>(i))));
  out.validate();
  leg1.target = out;
  leg2.target = out;
  validate(leg1, false);
  validate(leg2, false);
  return {std::move(out), std::move(leg1), std::move(leg2)};
}

Suspension suspension(const Presentation& p, int lo, int hi, int fallback_weight) {
  Suspension s;
  // The closure must reach one degree past the window so that the glued
  // algebra is certified on all of it.
  s.closure = acyclic_closure(p, lo, hi + 1, fallback_weight);
  s.pushout = pushout_free_extensions(s.closure.closure, s.closure.closure, p);
  return s;
}

PresentationMorphism lift_free_extension(const Presentation& source, std::size_t base_size, const Presentation& target,
                                         std::vector<Element> base_images, int fallback_weight) {
  if (base_images.size() != base_size) throw ValidationError("lift needs one image per base generator");
  PresentationMorphism f{source, target, std::move(base_images)};
  for (std::size_t i = base_size; i < source.size(); ++i) {
    const int z = static_cast<int>(i);
    const int deg = source.generator(z).degree;
    PresentationMorphism partial = f;
    partial.images.resize(source.size());  // later generators do not occur in d(z)
    const Element boundary = apply(partial, source.differential_of(z));
    const int w = auto_weight(target, deg, deg, fallback_weight);
    const auto cx = algebra_complex(target, deg, deg, w);
    auto solution = solve(*cx.complex.differential(deg), cx.coordinates(deg + 1, boundary));
    if (!solution)
      throw ScopeError("cannot lift " + source.generator(z).name + ": " + target.format(boundary) +
                       " is not a coboundary in the target");
    f.images.push_back(cx.element(deg, *solution));
  }
  return f;
}

}  // namespace qdga

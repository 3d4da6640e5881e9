#include <catch_amalgamated.hpp>

#include "qdga/algebra_complex.hpp"
#include "qdga/constructions.hpp"
#include "qdga/errors.hpp"
#include "qdga/homotopy.hpp"
#include "qdga/scenarios.hpp"
#include "test_support.hpp"

using namespace qdga;
using qdga::testing::load_presentation;
using qdga::testing::presentation_fixtures;

namespace {

Element gen(const Presentation& p, const std::string& name) { return Element::monomial({p.index_of(name)}); }

Presentation lurie_associative(MonomialOrder order) {
  Presentation p(Flavor::Associative, {{"x", 0}, {"y", 0}, {"z", -1}}, order);
  p.set_differential("z", "x*y - y*x");
  return p;
}

void check_d_squared(const Presentation& p, int lo, int hi) {
  const auto c = algebra_complex(p, lo, hi, auto_weight(p, lo, hi, 4));
  CHECK_FALSE(c.complex.square_zero_violation());
  for (int g = 0; g < static_cast<int>(p.size()); ++g)
    CHECK(p.differential(p.differential(Element::monomial({g}))).is_zero());
}

}  // namespace

TEST_CASE("normal forms and Koszul signs", "[dgalg]") {
  Presentation p(Flavor::Commutative, {{"a", 3}, {"b", 3}, {"x", 2}});
  const Element a = gen(p, "a"), b = gen(p, "b"), x = gen(p, "x");
  CHECK(p.multiply(x, Element::unit()) == x);
  CHECK(p.multiply(b, a) == Rational(-1) * p.multiply(a, b));
  CHECK(p.multiply(a, a).is_zero());
  CHECK(p.multiply(x, a) == p.multiply(a, x));
  const Element e = p.multiply(p.multiply(b, x), a);
  CHECK(p.normalize(e) == e);
  CHECK(p.normalize(p.normalize(e)) == p.normalize(e));
}

TEST_CASE("graded commutativity on every window monomial", "[dgalg]") {
  for (const auto& name : presentation_fixtures()) {
    const auto p = load_presentation(name);
    if (p.flavor() != Flavor::Commutative) continue;
    std::vector<Monomial> ms;
    for (int n = 0; n <= 6; ++n)
      for (auto& m : p.basis(n, 3)) ms.push_back(m);
    for (const auto& u : ms)
      for (const auto& v : ms) {
        const int sign = sign_of_parity(static_cast<long long>(p.degree(u)) * p.degree(v));
        CHECK(p.multiply(Element::monomial(u), Element::monomial(v)) ==
              Rational(sign) * p.multiply(Element::monomial(v), Element::monomial(u)));
      }
  }
}

TEST_CASE("Leibniz differentials", "[dgalg]") {
  const auto lurie = lurie_associative_source();
  CHECK(lurie.differential(gen(lurie, "z")) == parse_element(lurie, "x*y - y*x"));
  CHECK(lurie.differential(Element::unit()).is_zero());
  const auto k = load_presentation("koszul.dga");
  const Element y = gen(k, "y");
  CHECK(k.differential(k.multiply(y, y)) == parse_element(k, "x y - y x"));
}

TEST_CASE("invalid differentials are rejected", "[dgalg]") {
  Presentation p(Flavor::Associative, {{"x", 2}, {"y", 1}});
  p.set_differential("y", "x*x");
  CHECK_THROWS_AS(p.validate(), ValidationError);
  Presentation q(Flavor::Commutative, {{"x", 2}, {"y", 3}, {"z", 4}});
  q.set_differential("y", "x^2");
  q.set_differential("z", "y x");
  CHECK_THROWS_AS(q.validate(), ValidationError);
  CHECK_THROWS(parse_element(q, "w + x"));
}

TEST_CASE("monomial bases", "[dgalg]") {
  Presentation x2(Flavor::Commutative, {{"x", 2}});
  CHECK(x2.basis(4, 4) == std::vector<Monomial>{{0, 0}});
  Presentation xy(Flavor::Associative, {{"x", 0}, {"y", 0}});
  CHECK(xy.basis(0, 2) == std::vector<Monomial>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK_FALSE(xy.basis_exact(0, 2));
  Presentation a3(Flavor::Commutative, {{"a", 3}});
  CHECK(a3.basis(6, 4).empty());
}

TEST_CASE("abelianization", "[dgalg]") {
  const auto ab = abelianize(lurie_associative_source());
  CHECK(ab.commutative.flavor() == Flavor::Commutative);
  CHECK(ab.commutative.size() == 3);
  CHECK(ab.commutative.differential_of(ab.commutative.index_of("z")).is_zero());
  CHECK(abelianize(ab.commutative).commutative == ab.commutative);

  Presentation t(Flavor::Associative, {{"x", 0}, {"y", 0}});
  const auto q = abelianize(t).commutative;
  CHECK(q == lurie_commutative_source());
}

TEST_CASE("universal factorization through the abelianization", "[dgalg]") {
  Presentation t(Flavor::Associative, {{"x", 0}, {"y", 0}});
  const auto s = FiniteDGAlgebra::square_zero(2, 1);
  SECTION("generators to a and b") {
    FiniteMorphism f{t, s, {s.basis_vector(*s.find("a")), s.basis_vector(*s.find("b"))}};
    const auto fac = check_universal_factorization(f);
    CHECK(fac.factor.images == f.images);
    CHECK_FALSE(fac.uniqueness_certificate.empty());
  }
  SECTION("augmentation") {
    FiniteMorphism f{t, FiniteDGAlgebra::ground_field(), {QVector{0}, QVector{0}}};
    CHECK(check_universal_factorization(f).factor.source == abelianize(t).commutative);
  }
  SECTION("canonical map factors through the identity") {
    const auto ab = abelianize(lurie_associative_source());
    const auto fac = check_universal_factorization(ab.canonical);
    CHECK(fac.factor.images == identity_morphism(ab.commutative).images);
  }
}

TEST_CASE("acyclic closures", "[dgalg]") {
  SECTION("T(x2) gets y1 with dy1 = x") {
    Presentation t(Flavor::Associative, {{"x", 2}});
    const auto c = acyclic_closure(t, 0, 6);
    REQUIRE(c.closure.size() == 2);
    CHECK(c.closure.generator(1).degree == 1);
    CHECK(c.closure.differential_of(1) == gen(c.closure, "x"));
    CHECK(c.certified);
    CHECK(is_free_extension(c.closure, t));
    check_d_squared(c.closure, 0, 6);
  }
  SECTION("the ground field is already acyclic") {
    Presentation q(Flavor::Commutative, {});
    const auto c = acyclic_closure(q, 0, 6);
    CHECK(c.closure.size() == 0);
    CHECK(c.certified);
  }
  SECTION("Lambda(x3) gets y2 with dy2 = x") {
    Presentation l(Flavor::Commutative, {{"x", 3}});
    const auto c = acyclic_closure(l, 0, 6);
    REQUIRE(c.closure.size() == 2);
    CHECK(c.closure.generator(1).degree == 2);
    CHECK(c.certified);
    CHECK(c.check.report.dims() == std::map<int, std::size_t>{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
  }
}

TEST_CASE("suspensions as pushouts of closures", "[dgalg]") {
  SECTION("associative T(x2)") {
    Presentation t(Flavor::Associative, {{"x", 2}});
    const auto s = suspension(t, 0, 6);
    const auto& p = s.pushout.presentation;
    REQUIRE(p.size() == 3);
    CHECK(p.differential_of(1) == gen(p, "x"));
    CHECK(p.differential_of(2) == gen(p, "x"));
    check_d_squared(p, 0, 6);
    const auto h = presentation_cohomology(p, 0, 6, auto_weight(p, 0, 6, 8));
    for (int n = 0; n <= 6; ++n) CHECK(h.report.dim(n) == 1);
  }
  SECTION("ground field") {
    const auto s = suspension(Presentation(Flavor::Associative, {}), 0, 4);
    CHECK(s.pushout.presentation.size() == 0);
  }
  SECTION("commutative Lambda(x3) matches its bar cohomology dims") {
    Presentation l(Flavor::Commutative, {{"x", 3}});
    const auto s = suspension(l, 0, 4);
    const auto& p = s.pushout.presentation;
    check_d_squared(p, 0, 4);
    const auto h = presentation_cohomology(p, 0, 4, auto_weight(p, 0, 4, 8));
    CHECK(h.report.dims() == std::map<int, std::size_t>{{0, 1}, {1, 0}, {2, 1}, {3, 0}, {4, 1}});
  }
}

TEST_CASE("pushouts reject legs over a different base", "[dgalg]") {
  Presentation t(Flavor::Associative, {{"x", 2}});
  Presentation u(Flavor::Associative, {{"w", 2}});
  const auto k = acyclic_closure(t, 0, 4).closure;
  CHECK_THROWS_AS(pushout_free_extensions(k, k, u), ValidationError);
}

TEST_CASE("d squared vanishes on every fixture", "[dgalg]") {
  for (const auto& name : presentation_fixtures()) {
    INFO(name);
    check_d_squared(load_presentation(name), -1, 6);
  }
}

TEST_CASE("homotopy classes of maps into the square-zero target", "[dgalg]") {
  const auto s = FiniteDGAlgebra::square_zero(2, 1);
  CHECK(homotopy_classes_into(lurie_commutative_source(), s, MapMode::Unaugmented).dimension == 6);
  CHECK(homotopy_classes_into(lurie_associative_source(), s, MapMode::Unaugmented).dimension == 7);
  const auto point = homotopy_classes_into(Presentation(Flavor::Commutative, {}), s, MapMode::Unaugmented);
  CHECK(point.maps_exist);
  CHECK(point.dimension == 0);
}

TEST_CASE("homotopy classes do not depend on the monomial order", "[dgalg]") {
  const auto s = FiniteDGAlgebra::square_zero(2, 1);
  for (auto mode : {MapMode::Augmented, MapMode::Unaugmented}) {
    const auto asc = homotopy_classes_into(lurie_associative(MonomialOrder::Ascending), s, mode);
    const auto desc = homotopy_classes_into(lurie_associative(MonomialOrder::Descending), s, mode);
    CHECK(asc.dimension == desc.dimension);
    CHECK(asc.homotopy_rank == desc.homotopy_rank);
  }
}

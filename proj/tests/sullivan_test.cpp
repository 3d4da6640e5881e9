#include <catch_amalgamated.hpp>

#include "qdga/errors.hpp"
#include "qdga/sullivan.hpp"
#include "test_support.hpp"

using namespace qdga;

using Dims = std::map<int, std::size_t>;

TEST_CASE("minimal model of the 2-sphere cohomology", "[sullivan]") {
  const auto m = minimal_model(FiniteDGAlgebra::sphere_cohomology(2), 6);
  REQUIRE(m.model.size() == 2);
  CHECK(m.model.generator(0) == Generator{"a", 2});
  CHECK(m.model.generator(1) == Generator{"b", 3});
  CHECK(m.model.differential_of(1) == parse_element(m.model, "a^2"));
  CHECK(m.minimal);
  CHECK(m.check.isomorphism());
  CHECK(homotopy_groups(m) == Dims{{2, 1}, {3, 1}, {4, 0}, {5, 0}, {6, 0}});
}

TEST_CASE("odd spheres need one generator", "[sullivan]") {
  for (int n : {3, 5}) {
    const auto m = minimal_model(FiniteDGAlgebra::sphere_cohomology(n), 6);
    REQUIRE(m.model.size() == 1);
    CHECK(m.model.generator(0).degree == n);
    CHECK(m.model.differential_of(0).is_zero());
    CHECK(m.check.isomorphism());
  }
}

TEST_CASE("an already minimal presentation maps to itself", "[sullivan]") {
  const auto s2 = qdga::testing::load_presentation("S2.dga");
  CHECK(is_minimal(s2));
  const auto m = minimal_model(s2, 6);
  CHECK(m.model == s2);
  CHECK(std::get<PresentationMorphism>(m.map).images == identity_morphism(s2).images);
  CHECK(m.check.isomorphism());
}

TEST_CASE("non-minimal presentations are replaced", "[sullivan]") {
  // Lambda(x2, y3, z1) with dz = x: the pair (x, z) is contractible.
  Presentation p(Flavor::Commutative, {{"x", 2}, {"y", 3}, {"z", 1}});
  p.set_differential("z", "x");
  CHECK_FALSE(is_minimal(p));
  const auto m = minimal_model(p, 6);
  CHECK(m.minimal);
  CHECK(homotopy_groups(m) == Dims{{2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}});
}

TEST_CASE("products of spheres", "[sullivan]") {
  const auto m = space_preset("S2xS3", 6);
  CHECK(homotopy_groups(m) == Dims{{2, 1}, {3, 2}, {4, 0}, {5, 0}, {6, 0}});
  const auto built = minimal_model(qdga::testing::load_presentation("S2xS3.dga"), 6);
  CHECK(homotopy_groups(built) == homotopy_groups(m));
}

TEST_CASE("loop space cohomology", "[sullivan]") {
  CHECK(loop_cohomology(space_preset("S3", 6), 0, 6).dims() ==
        Dims{{0, 1}, {1, 0}, {2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 1}});
  CHECK(loop_cohomology(space_preset("S4", 6), 0, 6).dims() ==
        Dims{{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 1}});
  CHECK(loop_cohomology(space_preset("point", 4), 0, 4).dims() == Dims{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
}

TEST_CASE("invalid inputs", "[sullivan]") {
  CHECK_THROWS_AS(minimal_model(FiniteDGAlgebra::sphere_cohomology(1), 4), ValidationError);
  CHECK_THROWS_AS(minimal_model(FiniteDGAlgebra::square_zero(2, 0), 4), ValidationError);
  CHECK_THROWS_AS(minimal_model(Presentation(Flavor::Associative, {{"x", 2}}), 4), ValidationError);
  CHECK_THROWS_AS(minimal_model(Presentation(Flavor::Commutative, {{"x", 0}}), 4), ScopeError);
  CHECK_THROWS_AS(space_preset("torus", 4), ValidationError);
}

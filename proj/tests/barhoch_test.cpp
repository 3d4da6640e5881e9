#include <catch_amalgamated.hpp>

#include <algorithm>

#include "qdga/bar.hpp"
#include "qdga/errors.hpp"
#include "qdga/harrison.hpp"
#include "qdga/hochschild.hpp"
#include "qdga/scenarios.hpp"
#include "test_support.hpp"

using namespace qdga;
using qdga::testing::load_presentation;
using qdga::testing::presentation_fixtures;

namespace {

using Dims = std::map<int, std::size_t>;

Dims ones(int lo, int hi, int step = 1) {
  Dims d;
  for (int n = lo; n <= hi; ++n) d[n] = (n - lo) % step == 0 ? 1 : 0;
  return d;
}

BarChain single(const BarWord& w, Rational c = 1) { return BarChain{{w, c}}; }

BarChain scaled(BarChain c, const Rational& s) {
  for (auto& [w, x] : c) x *= s;
  return c;
}

// All bar words over the first `letters` monomials with 1..max_len letters.
std::vector<BarWord> words_up_to(const std::vector<Monomial>& letters, std::size_t max_len) {
  std::vector<BarWord> out, layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<BarWord> next;
    for (const auto& w : layer)
      for (const auto& l : letters) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Presentation lambda(std::vector<Generator> gens) { return Presentation(Flavor::Commutative, std::move(gens)); }

}  // namespace

TEST_CASE("bar cohomology of small algebras", "[barhoch]") {
  CHECK(bar_cohomology(lambda({}), 0, 4).report.dims() == Dims{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(bar_cohomology(lambda({{"x", 3}}), 0, 6).report.dims() == ones(0, 6, 2));
  const auto s2 = bar_cohomology(load_presentation("S2.dga"), 0, 6);
  CHECK(s2.report.dims() == ones(0, 6));
  CHECK(s2.truncation.exact);
}

TEST_CASE("bar differential squares to zero on every fixture", "[barhoch]") {
  for (const auto& name : presentation_fixtures()) {
    INFO(name);
    const auto p = load_presentation(name);
    const auto b = bar_complex(p, 0, 6, bar_auto_weight(p, 0, 6, 3));
    CHECK_FALSE(b.complex.square_zero_violation());
  }
}

TEST_CASE("Hochschild homology equals bar cohomology on every fixture", "[barhoch]") {
  for (const auto& name : presentation_fixtures()) {
    INFO(name);
    const auto p = load_presentation(name);
    // Same truncation on both sides, so the comparison is exact even when
    // the weight bound binds.
    const int w = bar_auto_weight(p, 0, 6, 3);
    const auto hc = hochschild_complex(p, 0, 6, w);
    const auto bc = bar_complex(p, 0, 6, w);
    const auto homology = cohomology(hc.chains, 0, 6);
    CHECK(homology.dims() == cohomology(bc.complex, 0, 6).dims());
    CHECK_FALSE(hc.chains.square_zero_violation());
    CHECK_FALSE(hc.cochains.square_zero_violation());
    const auto dual = cohomology(hc.cochains, -6, 0);
    for (int n = 0; n <= 6; ++n) CHECK(dual.dim(-n) == homology.dim(n));
  }
}

TEST_CASE("oversized truncations are refused, not attempted", "[barhoch]") {
  const auto k = load_presentation("koszul.dga");
  CHECK_THROWS_AS(bar_complex(k, 0, 6, 4), ScopeError);
  // Weight 3 fits; its stabilization pass at weight 4 does not, so the
  // result is reported as unstabilized.
  const auto b = bar_cohomology(k, 0, 6, 3);
  CHECK_FALSE(b.truncation.exact);
  CHECK_FALSE(b.truncation.stabilized);
}

TEST_CASE("Hochschild refuses augmentation overrides", "[barhoch]") {
  Presentation p(Flavor::Commutative, {{"x", 0}});
  p.set_augmentation(0, 1);
  CHECK_THROWS_AS(hochschild_complex(p, 0, 2, 2), ScopeError);
}

TEST_CASE("shuffle product basics", "[barhoch]") {
  SECTION("the empty word is the unit") {
    const auto a = lambda({{"x", 3}, {"y", 2}});
    const BarWord w{{0}, {1}};
    CHECK(shuffle_product(a, BarWord{}, w) == single(w));
    CHECK(shuffle_product(a, w, BarWord{}) == single(w));
  }
  SECTION("two odd suspended letters anticommute") {
    const auto a = lambda({{"a", 2}, {"b", 2}});
    CHECK(shuffle_product(a, BarWord{{0}}, BarWord{{1}}) == BarChain{{{{0}, {1}}, 1}, {{{1}, {0}}, -1}});
  }
  SECTION("an even suspended letter shuffled with itself") {
    const auto a = lambda({{"x", 3}});
    CHECK(shuffle_product(a, BarWord{{0}}, BarWord{{0}}) == single({{0}, {0}}, 2));
  }
  SECTION("degree-zero letters of Q[x,y]") {
    const auto a = lurie_commutative_source();
    CHECK(shuffle_product(a, BarWord{{0}}, BarWord{{1}}) == BarChain{{{{0}, {1}}, 1}, {{{1}, {0}}, -1}});
  }
  SECTION("associative presentations are rejected") {
    Presentation t(Flavor::Associative, {{"x", 2}});
    CHECK_THROWS_AS(shuffle_product(t, BarWord{{0}}, BarWord{{0}}), ValidationError);
  }
}

TEST_CASE("shuffle product is graded commutative and associative up to weight 3", "[barhoch]") {
  const auto a = lambda({{"a", 2}, {"b", 3}, {"c", 4}});
  const std::vector<Monomial> letters{{0}, {1}, {2}, {0, 1}};
  const auto ws = words_up_to(letters, 2);
  for (const auto& u : ws)
    for (const auto& v : ws) {
      if (u.size() + v.size() > 3) continue;
      const int su = bar_degree(a, u), sv = bar_degree(a, v);
      CHECK(shuffle_product(a, u, v) == scaled(shuffle_product(a, v, u), sign_of_parity(static_cast<long long>(su) * sv)));
    }
  const std::vector<Monomial> singles{{0}, {1}, {2}};
  for (const auto& x : singles)
    for (const auto& y : singles)
      for (const auto& z : singles) {
        const BarChain cx = single({x}), cy = single({y}), cz = single({z});
        CHECK(shuffle_product(a, shuffle_product(a, cx, cy), cz) == shuffle_product(a, cx, shuffle_product(a, cy, cz)));
      }
}

TEST_CASE("Harrison cochains vanish on shuffles and form a subcomplex", "[barhoch]") {
  SECTION("Q[x,y] kills x|y - y|x") {
    const auto h = harrison_complex(lurie_commutative_source(), -2, 0, 2);
    const auto& inc = h.inclusion.at(2);
    const auto span = shuffle_span(h.bar, -2);
    REQUIRE_FALSE(span.empty());
    for (const auto& s : span) CHECK(is_zero(inc.transpose().apply(s)));
    CHECK(inc.cols() < inc.rows());
  }
  SECTION("Lambda(x3) has one class, in internal degree -2") {
    const auto h = harrison_complex(lambda({{"x", 3}}), 0, 6);
    CHECK_FALSE(h.complex.square_zero_violation());
    for (int n = -6; n <= 0; ++n) CHECK(h.report.dim(n) == (n == -2 ? 1u : 0u));
    CHECK(aq_index(-2) == -3);
    CHECK(pi_index(-2) == 3);
    CHECK(internal_degree_for_pi(3) == -2);
  }
  SECTION("S2 model detects pi_2 and pi_3") {
    const auto h = harrison_complex(load_presentation("S2.dga"), 0, 6);
    for (int n = -6; n <= 0; ++n) CHECK(h.report.dim(n) == (n == -1 || n == -2 ? 1u : 0u));
  }
  SECTION("closure holds on every commutative fixture") {
    for (const auto& name : presentation_fixtures()) {
      const auto p = load_presentation(name);
      if (p.flavor() != Flavor::Commutative) continue;
      INFO(name);
      CHECK_NOTHROW(harrison_complex(p, 0, 5));
    }
  }
}

TEST_CASE("Eulerian idempotent", "[barhoch]") {
  CHECK(eulerian_idempotent(1) == GroupAlgebraElement{{{0}, 1}});
  for (int n = 1; n <= 5; ++n) {
    INFO(n);
    const auto e = eulerian_idempotent(n);
    CHECK(group_multiply(e, e) == e);
  }
  CHECK_THROWS_AS(eulerian_idempotent(0), ScopeError);
  CHECK_THROWS_AS(eulerian_idempotent(kEulerianMaxWeight + 1), ScopeError);
}

TEST_CASE("Eulerian coefficients follow the descent formula", "[barhoch]") {
  // e_n = sum over sigma of (-1)^des / (n * binom(n-1, des)) sigma, with the
  // descents counted on the inverse of the permutation word.
  for (int n = 1; n <= 5; ++n) {
    const auto e = eulerian_idempotent(n);
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
      int des = 0;
      for (std::size_t i = 0; i + 1 < inv.size(); ++i) des += inv[i] > inv[i + 1];
      Integer binom = 1;
      for (int k = 0; k < des; ++k) binom = binom * (n - 1 - k) / (k + 1);
      const Rational expected = Rational(sign_of_parity(des)) / (Rational(n) * Rational(binom));
      const auto it = e.find(p);
      INFO("n=" << n << " des=" << des);
      CHECK((it == e.end() ? Rational(0) : it->second) == expected);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("Eulerian image equals the Harrison cochains", "[barhoch]") {
  const auto h = harrison_complex(lambda({{"x", 3}}), 0, 5);
  const auto check = eulerian_check(h);
  REQUIRE_FALSE(check.empty());
  for (const auto& [n, d] : check) {
    INFO(n);
    CHECK(d.agrees);
    CHECK(d.image_dim == d.harrison_dim);
  }
  for (int n = 0; n <= 5; ++n)
    for (int w = 1; w <= 4; ++w) {
      const auto e = eulerian_projection(h.bar, n, w);
      CHECK(e * e == e);
    }
}

TEST_CASE("AQ to HH comparison", "[barhoch]") {
  SECTION("Lambda(x3)") {
    const auto m = aq_to_hh_map(lambda({{"x", 3}}), 2, 6);
    REQUIRE(m.spots.size() == 5);
    for (const auto& s : m.spots) {
      INFO(s.i);
      CHECK(s.injective);
      CHECK(s.aq_dim == (s.i == 3 ? 1u : 0u));
      CHECK(s.hh_dim >= s.aq_dim);
      if (s.aq_dim) {
        REQUIRE(s.left_inverse);
      }
    }
  }
  SECTION("S2 model") {
    const auto m = aq_to_hh_map(load_presentation("S2.dga"), 2, 6);
    for (const auto& s : m.spots) {
      CHECK(s.injective);
      CHECK(s.aq_dim == (s.i == 2 || s.i == 3 ? 1u : 0u));
    }
  }
  SECTION("i = 1 is out of scope") {
    CHECK_THROWS_AS(aq_to_hh_map(lambda({{"x", 3}}), 1, 3), ScopeError);
  }
}

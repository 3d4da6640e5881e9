// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qdga/algebra_complex.hpp"
#include "qdga/bar.hpp"
#include "qdga/constructions.hpp"
#include "qdga/file_format.hpp"
#include "qdga/harrison.hpp"
#include "qdga/hochschild.hpp"
#include "qdga/homotopy.hpp"
#include "qdga/parallel.hpp"
#include "qdga/report.hpp"
#include "qdga/scenarios.hpp"
#include "qdga/sullivan.hpp"

using namespace qdga;

namespace {

using Dims = std::map<int, std::size_t>;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void within(double seconds, double limit, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << seconds << " s (limit " << limit << " s)";
    expect(seconds < limit, s.str());
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

double timed(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string dims_text(const Dims& d) {
  std::string s;
  for (const auto& [n, k] : d) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s;
}

const Table& table(const Report& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name == name) return t;
  throw std::runtime_error("report " + r.scenario + " has no table '" + name + "'");
}

Presentation fixture(const std::string& name) {
  return std::get<Presentation>(load_document(std::string(QDGA_FIXTURE_DIR) + "/" + name));
}

const std::vector<std::string> kFixtures{"S2.dga", "S2xS3.dga", "S3.dga", "Tx2.dga", "Tx3.dga", "empty.dga", "koszul.dga"};

Check criterion1() {
  Check c;
  const auto target = std::get<FiniteDGAlgebra>(resolve_document("builtin:squarezero-3-1"));
  std::size_t comm = 0, assoc = 0;
  bool passed = false;
  const double t = timed([&] {
    comm = homotopy_classes_into(lurie_commutative_source(), target, MapMode::Unaugmented).dimension;
    assoc = homotopy_classes_into(lurie_associative_source(), target, MapMode::Unaugmented).dimension;
    passed = verify_lurie(target).passed();
  });
  c.expect(comm == 6, "commutative pi0 dim " + std::to_string(comm) + " != 6");
  c.expect(assoc == 7, "associative pi0 dim " + std::to_string(assoc) + " != 7");
  c.expect(passed, "verify lurie verdicts");
  c.within(t, 5, "lurie");
  return c;
}

Check criterion2() {
  Check c;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"Tx2.dga", {"1", "1", "0", "0", "0"}}, {"Tx3.dga", {"1", "0", "1", "0", "1"}}};
  for (const auto& [name, expected] : cases) {
    Report r;
    const double t = timed([&] { r = verify_retract(fixture(name), 0, 4); });
    c.within(t, 30, "retract " + name);
    c.expect(r.passed(), "retract " + name + " verdicts");
    const auto& rows = table(r, "H(u_c)").rows;
    c.expect(rows.size() == expected.size(), "retract " + name + " row count");
    for (std::size_t k = 0; k < rows.size() && k < expected.size(); ++k) {
      const auto& row = rows[k];
      const std::string where = "retract " + name + " degree " + row[0];
      c.expect(row[1] == expected[k] && row[2] == expected[k], where + " dims " + row[1] + "/" + row[2]);
      c.expect(row[4] == "yes", where + " not injective");
      c.expect(row[1] == "0" || row[5] != "-", where + " lacks a left inverse");
    }
  }
  return c;
}

Check criterion3() {
  Check c;
  const std::vector<std::pair<std::string, std::set<int>>> cases{{"S3.dga", {3}}, {"S2.dga", {2, 3}}};
  for (const auto& [name, aq_spots] : cases) {
    Report r;
    AqHhMap m;
    const double t = timed([&] {
      r = verify_aq_hh_injectivity(fixture(name), 0, 6);
      m = aq_to_hh_map(fixture(name), 2, 6);
    });
    c.within(t, 60, "injectivity " + name);
    c.expect(r.passed(), "injectivity " + name + " verdicts");
    c.expect(m.spots.size() == 5, "injectivity " + name + " spot count");
    for (const auto& s : m.spots) {
      const std::string where = "injectivity " + name + " i=" + std::to_string(s.i);
      c.expect(s.injective, where + " not injective");
      c.expect(s.aq_dim == (aq_spots.count(s.i) ? 1u : 0u), where + " dim AQ " + std::to_string(s.aq_dim));
    }
  }
  return c;
}

Check criterion4() {
  Check c;
  // Classical loop-space cohomology over [0, 8]: Omega S^{2n+1} has a class
  // in each multiple of 2n; Omega S^{2n} ~ S^{2n-1} x Omega S^{4n-1}.
  const std::vector<std::pair<std::string, Dims>> cases{
      {"S2", {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}}},
      {"S3", {{0, 1}, {1, 0}, {2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 1}, {7, 0}, {8, 1}}},
      {"S4", {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 1}, {7, 0}, {8, 0}}},
      {"S5", {{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 0}, {6, 0}, {7, 0}, {8, 1}}}};
  for (const auto& [space, expected] : cases) {
    Report r;
    CohomologyReport loop;
    const double t = timed([&] {
      r = verify_pi_in_loop(space, 0, 8);
      loop = loop_cohomology(space_preset(space, 8), 0, 8);
    });
    c.within(t, 60, "pi-in-loop " + space);
    c.expect(r.passed(), "pi-in-loop " + space + " verdicts");
    c.expect(loop.dims() == expected, "H(Omega " + space + ") dims " + dims_text(loop.dims()));
    for (const auto& row : table(r, "pi_i against H^{i-1}(Omega X)").rows)
      c.expect(row[3] == "yes", "pi-in-loop " + space + " fails at i=" + row[0]);
  }
  return c;
}

Check criterion5() {
  Check c;
  for (const auto& name : {"S3.dga", "S2.dga"}) {
    const auto p = fixture(name);
    const auto r = verify_duality(p, 0, 6);
    c.expect(r.passed(), std::string("duality ") + name + " verdicts");
    const auto h = hochschild_trivial_coefficients(p, 0, 6);
    for (int n = 0; n <= 6; ++n)
      c.expect(h.cohomology.dim(-n) == h.homology.dim(n), std::string("duality ") + name + " n=" + std::to_string(n));
  }
  return c;
}

Check criterion6() {
  Check c;
  for (const auto& name : kFixtures) {
    const auto p = fixture(name);
    const int w = bar_auto_weight(p, 0, 6, 3);
    const auto hh = cohomology(hochschild_complex(p, 0, 6, w).chains, 0, 6).dims();
    const auto bar = cohomology(bar_complex(p, 0, 6, w).complex, 0, 6).dims();
    c.expect(hh == bar, name + ": HH " + dims_text(hh) + " vs bar " + dims_text(bar));
  }
  return c;
}

BarChain scaled(BarChain x, int s) {
  for (auto& [w, q] : x) q *= s;
  return x;
}

Check criterion7() {
  Check c;
  for (const auto& name : kFixtures) {
    const auto p = fixture(name);
    const auto ac = algebra_complex(p, -1, 6, auto_weight(p, -1, 6, 4));
    c.expect(!ac.complex.square_zero_violation(), "d^2 on " + name);
    const auto bc = bar_complex(p, 0, 6, bar_auto_weight(p, 0, 6, 3));
    c.expect(!bc.complex.square_zero_violation(), "bar d^2 on " + name);
    if (p.flavor() == Flavor::Commutative) {
      std::vector<Monomial> ms;
      for (int n = 0; n <= 6; ++n)
        for (auto& m : p.basis(n, 3)) ms.push_back(m);
      for (const auto& u : ms)
        for (const auto& v : ms) {
          const int s = sign_of_parity(static_cast<long long>(p.degree(u)) * p.degree(v));
          c.expect(p.multiply(Element::monomial(u), Element::monomial(v)) ==
                       Rational(s) * p.multiply(Element::monomial(v), Element::monomial(u)),
                   "Koszul law on " + name);
        }
      try {
        (void)harrison_complex(p, 0, 5);
      } catch (const std::exception& e) {
        c.expect(false, "Harrison closure on " + name + ": " + e.what());
      }
    } else {
      const auto ab = abelianize(p).commutative;
      c.expect(abelianize(ab).commutative == ab, "abelianize idempotent on " + name);
    }
    const auto s = suspension(p, 0, 4);
    c.expect(!algebra_complex(s.closure.closure, 0, 4, auto_weight(s.closure.closure, 0, 4, 4))
                  .complex.square_zero_violation(),
             "d^2 after acyclic_closure on " + name);
    c.expect(!algebra_complex(s.pushout.presentation, 0, 4, auto_weight(s.pushout.presentation, 0, 4, 4))
                  .complex.square_zero_violation(),
             "d^2 after pushout on " + name);
  }
  const auto lurie = abelianize(lurie_associative_source()).commutative;
  c.expect(abelianize(lurie).commutative == lurie, "abelianize idempotent on the Lurie source");

  const Presentation a(Flavor::Commutative, {{"a", 2}, {"b", 3}, {"c", 4}});
  const std::vector<Monomial> letters{{0}, {1}, {2}, {0, 1}};
  std::vector<BarWord> words;
  for (const auto& x : letters) {
    words.push_back({x});
    for (const auto& y : letters) words.push_back({x, y});
  }
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 3) continue;
      const int s = sign_of_parity(static_cast<long long>(bar_degree(a, u)) * bar_degree(a, v));
      c.expect(shuffle_product(a, u, v) == scaled(shuffle_product(a, v, u), s), "shuffle commutativity");
    }
  for (const auto& x : letters)
    for (const auto& y : letters)
      for (const auto& z : letters) {
        const BarChain cx{{{x}, 1}}, cy{{{y}, 1}}, cz{{{z}, 1}};
        c.expect(shuffle_product(a, shuffle_product(a, cx, cy), cz) == shuffle_product(a, cx, shuffle_product(a, cy, cz)),
                 "shuffle associativity");
      }

  for (int n = 1; n <= 5; ++n) {
    const auto e = eulerian_idempotent(n);
    c.expect(group_multiply(e, e) == e, "Eulerian idempotent n=" + std::to_string(n));
  }
  const auto h = harrison_complex(fixture("S3.dga"), 0, 5);
  c.expect(!h.complex.square_zero_violation(), "Harrison d^2 on Lambda(x3)");
  for (const auto& [n, d] : eulerian_check(h))
    c.expect(d.agrees && d.image_dim == d.harrison_dim, "Eulerian image vs Harrison at " + std::to_string(n));
  return c;
}

Check criterion8() {
  Check c;
  auto run = [] {
    std::string out;
    out += render_json(verify_lurie(std::get<FiniteDGAlgebra>(resolve_document("builtin:squarezero-3-1"))));
    out += render_json(verify_retract(fixture("Tx3.dga"), 0, 4));
    out += render_json(verify_aq_hh_injectivity(fixture("S2.dga"), 0, 6));
    out += render_json(verify_pi_in_loop("S3", 0, 8));
    out += render_json(verify_duality(fixture("S2.dga"), 0, 6));
    return out;
  };
  set_thread_count(1);
  const auto first = run();
  const auto second = run();
  set_thread_count(4);
  const auto threaded = run();
  set_thread_count(1);
  c.expect(first == second, "repeated runs differ");
  c.expect(first == threaded, "thread counts 1 and 4 differ");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"Lurie counterexample dims 6 and 7", criterion1},
      {"retract H(u_c) injective for T(x2), T(x3)", criterion2},
      {"AQ -> HH injective for Lambda(x3), S2 model", criterion3},
      {"pi_i inside H^{i-1} of loop spaces of S2..S5", criterion4},
      {"Hochschild duality for Lambda(x3), S2 model", criterion5},
      {"Hochschild homology equals bar cohomology on fixtures", criterion6},
      {"property suites", criterion7},
      {"deterministic reports", criterion8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
    if (!c.ok()) {
      std::cout << " (" << c.summary() << ")";
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

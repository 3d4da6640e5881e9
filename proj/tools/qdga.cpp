#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdga/algebra_complex.hpp"
#include "qdga/bar.hpp"
#include "qdga/errors.hpp"
#include "qdga/file_format.hpp"
#include "qdga/harrison.hpp"
#include "qdga/hochschild.hpp"
#include "qdga/parallel.hpp"
#include "qdga/report.hpp"
#include "qdga/scenarios.hpp"
#include "qdga/sullivan.hpp"

namespace {

using namespace qdga;

enum Exit { kPass = 0, kVerdictFail = 1, kInputError = 2, kScopeRefusal = 3 };

struct Config {
  std::string window;
  std::optional<int> max_weight;
  std::string format = "table";
  bool strict = false;
  unsigned threads = 1;
  std::string input;
  std::string target = "builtin:squarezero-3-1";
  std::string space = "S3";
};

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (lo > hi) throw ValidationError("window " + text + " has lo > hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError("window must look like lo:hi, got '" + text + "'");
  }
}

std::pair<int, int> window_of(const Config& c, const std::string& fallback) {
  if (!c.window.empty()) return parse_window(c.window);
  if (const char* env = std::getenv("QDGA_WINDOW"); env && *env) return parse_window(env);
  return parse_window(fallback);
}

Presentation need_presentation(const AlgebraDocument& d) {
  if (const auto* p = std::get_if<Presentation>(&d)) return *p;
  throw ValidationError("this command needs a presentation, not a finite algebra");
}

AlgebraDocument need_input(const Config& c) {
  if (c.input.empty()) throw ValidationError("--input is required");
  return resolve_document(c.input);
}

void strict_check(const Config& c, const CohomologyReport& r, const Truncation& t) {
  if (!c.strict) return;
  if (!r.complete()) throw ScopeError("report is incomplete in the window");
  if (!t.exact && !t.stabilized) throw ScopeError("truncation at max_weight " + std::to_string(t.max_weight) + " is not certified stable");
}

Report cmd_cohomology(const Config& c) {
  const auto doc = need_input(c);
  const auto [lo, hi] = window_of(c, "0:6");
  Report r;
  r.scenario = "cohomology";
  r.inputs["input"] = c.input;
  r.inputs["window"] = std::to_string(lo) + ":" + std::to_string(hi);
  if (const auto* p = std::get_if<Presentation>(&doc)) {
    const auto h = presentation_cohomology(*p, lo, hi, c.max_weight.value_or(auto_weight(*p, lo, hi, 6)));
    strict_check(c, h.report, h.truncation);
    r.tables.push_back(cohomology_table("cohomology", h.report));
    r.truncation.push_back({"algebra", h.truncation});
  } else {
    const auto& f = std::get<FiniteDGAlgebra>(doc);
    const auto h = cohomology(f.complex(lo - 1, hi + 1), lo, hi, c.strict);
    r.tables.push_back(cohomology_table("cohomology", h));
  }
  return r;
}

Report cmd_bar(const Config& c) {
  const auto p = need_presentation(need_input(c));
  const auto [lo, hi] = window_of(c, "0:6");
  const auto b = bar_cohomology(p, lo, hi, c.max_weight);
  strict_check(c, b.report, b.truncation);
  Report r;
  r.scenario = "bar";
  r.inputs["input"] = c.input;
  r.inputs["window"] = std::to_string(lo) + ":" + std::to_string(hi);
  r.tables.push_back(cohomology_table("bar cohomology", b.report));
  r.truncation.push_back({"bar complex", b.truncation});
  return r;
}

Report cmd_hochschild(const Config& c) {
  const auto p = need_presentation(need_input(c));
  const auto [lo, hi] = window_of(c, "0:6");
  const auto h = hochschild_trivial_coefficients(p, lo, hi, c.max_weight);
  strict_check(c, h.homology, h.truncation);
  const auto b = bar_cohomology(p, lo, hi, h.truncation.max_weight);
  Report r;
  r.scenario = "hochschild";
  r.inputs["input"] = c.input;
  r.inputs["window"] = std::to_string(lo) + ":" + std::to_string(hi);
  r.tables.push_back(cohomology_table("Hochschild homology side HH_n", h.homology));
  r.tables.push_back(cohomology_table("Hochschild cochain side HH^{-n}", h.cohomology));
  r.truncation.push_back({"Hochschild complex", h.truncation});
  r.verdicts.push_back({"homology side equals bar cohomology", h.homology.dims() == b.report.dims(), "independent assemblies"});
  return r;
}

Report cmd_harrison(const Config& c) {
  const auto p = need_presentation(need_input(c));
  const auto [lo, hi] = window_of(c, "0:6");
  const auto h = harrison_complex(p, lo, hi, c.max_weight);
  strict_check(c, h.report, h.truncation);
  Report r;
  r.scenario = "harrison";
  r.inputs["input"] = c.input;
  r.inputs["window"] = std::to_string(lo) + ":" + std::to_string(hi);
  r.tables.push_back(cohomology_table("Harrison cohomology (internal degree)", h.report));
  Table t{"André-Quillen indexing", {"internal degree", "AQ index", "pi index", "dim"}, {}};
  for (const auto& [n, d] : h.report.degrees)
    t.rows.push_back({std::to_string(n), std::to_string(aq_index(n)), std::to_string(pi_index(n)), std::to_string(d.dim)});
  r.tables.push_back(std::move(t));
  r.truncation.push_back({"bar complex", h.truncation});
  return r;
}

Report cmd_minimal_model(const Config& c) {
  const auto doc = need_input(c);
  const auto [lo, hi] = window_of(c, "0:6");
  (void)lo;
  const SullivanModel m = std::visit([&](const auto& a) { return minimal_model(SullivanInput(a), hi); }, doc);
  Report r;
  r.scenario = "minimal-model";
  r.inputs["input"] = c.input;
  r.inputs["certified through degree"] = std::to_string(hi);
  Table gens{"generators", {"name", "degree", "d", "image"}, {}};
  for (int g = 0; g < static_cast<int>(m.model.size()); ++g) {
    std::string image;
    if (const auto* f = std::get_if<PresentationMorphism>(&m.map))
      image = f->target.format(f->images[static_cast<std::size_t>(g)]);
    else {
      const auto& f2 = std::get<FiniteMorphism>(m.map);
      image = f2.target.format(f2.images[static_cast<std::size_t>(g)]);
    }
    gens.rows.push_back({m.model.generator(g).name, std::to_string(m.model.generator(g).degree),
                         m.model.format(m.model.differential_of(g)), image});
  }
  r.tables.push_back(std::move(gens));
  Table pi{"rational homotopy", {"i", "dim pi_i"}, {}};
  for (const auto& [i, d] : homotopy_groups(m)) pi.rows.push_back({std::to_string(i), std::to_string(d)});
  r.tables.push_back(std::move(pi));
  Table check{"H(model) -> H(input)", {"degree", "dim source", "dim target", "isomorphism"}, {}};
  for (const auto& [n, d] : m.check.degrees)
    check.rows.push_back({std::to_string(n), std::to_string(m.check.source.dim(n)), std::to_string(m.check.target.dim(n)),
                          d.injective && d.surjective ? "yes" : "no"});
  r.tables.push_back(std::move(check));
  r.verdicts.push_back({"minimal", m.minimal, "no generator differential has a linear part"});
  r.verdicts.push_back({"quasi-isomorphism through degree " + std::to_string(hi), m.check.isomorphism(), ""});
  return r;
}

Report cmd_verify(const std::string& scenario, const Config& c) {
  if (scenario == "lurie") {
    const auto doc = resolve_document(c.target);
    const auto* s = std::get_if<FiniteDGAlgebra>(&doc);
    if (!s) throw ValidationError("the Lurie target must be a finite algebra");
    return verify_lurie(*s);
  }
  if (scenario == "retract") {
    const auto [lo, hi] = window_of(c, "0:4");
    return verify_retract(need_presentation(need_input(c)), lo, hi);
  }
  if (scenario == "injectivity") {
    const auto [lo, hi] = window_of(c, "0:6");
    return verify_aq_hh_injectivity(need_presentation(need_input(c)), lo, hi);
  }
  if (scenario == "pi-in-loop") {
    const auto [lo, hi] = window_of(c, "0:8");
    return verify_pi_in_loop(c.space, lo, hi);
  }
  if (scenario == "duality") {
    const auto [lo, hi] = window_of(c, "0:6");
    return verify_duality(need_presentation(need_input(c)), lo, hi);
  }
  throw ValidationError("unknown scenario '" + scenario + "'");
}

void add_common(CLI::App* app, Config& c) {
  app->add_option("--window", c.window, "Degree window lo:hi (default from QDGA_WINDOW, then per command)");
  app->add_option("--max-weight", c.max_weight, "Word-length bound for truncated enumerations")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app->add_flag("--strict", c.strict, "Refuse incomplete or unstabilized results");
  app->add_option("--threads", c.threads, "Worker threads for block assembly")->check(CLI::PositiveNumber);
  app->add_option("--input", c.input, "Algebra file or builtin:NAME");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational computations with differential graded algebras"};
  app.require_subcommand(1);
  Config c;
  std::string scenario;
  std::string command;

  const std::pair<const char*, const char*> commands[] = {
      {"cohomology", "Cohomology of a presentation or finite algebra"},
      {"bar", "Cohomology of the bar construction"},
      {"hochschild", "Hochschild homology and cohomology with trivial coefficients"},
      {"harrison", "Harrison (Andre-Quillen) cohomology"},
      {"minimal-model", "Sullivan minimal model and rational homotopy"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, c);
    sub->callback([&command, name] { command = name; });
  }
  auto* verify = app.add_subcommand("verify", "Run a verification scenario");
  verify->add_option("scenario", scenario, "lurie | retract | injectivity | pi-in-loop | duality")
      ->required()
      ->check(CLI::IsMember({"lurie", "retract", "injectivity", "pi-in-loop", "duality"}));
  add_common(verify, c);
  verify->add_option("--target", c.target, "Target algebra for the lurie scenario");
  verify->add_option("--space", c.space, "Space preset for pi-in-loop (point, S<n>, S<n>xS<m>)");
  verify->callback([&command] { command = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    set_thread_count(c.threads);
    Report r;
    if (command == "cohomology") r = cmd_cohomology(c);
    else if (command == "bar") r = cmd_bar(c);
    else if (command == "hochschild") r = cmd_hochschild(c);
    else if (command == "harrison") r = cmd_harrison(c);
    else if (command == "minimal-model") r = cmd_minimal_model(c);
    else r = cmd_verify(scenario, c);
    std::cout << (c.format == "json" ? render_json(r) : render_table(r));
    return r.passed() ? kPass : kVerdictFail;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScopeError& e) {
    std::cerr << "scope refusal: " << e.what() << "\n";
    return kScopeRefusal;
  } catch (const MissingDifferential& e) {
    std::cerr << "scope refusal: " << e.what() << "\n";
    return kScopeRefusal;
  }
}

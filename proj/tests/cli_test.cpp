#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "qdga/errors.hpp"
#include "qdga/file_format.hpp"
#include "test_support.hpp"

using namespace qdga;
using qdga::testing::fixture_path;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run qdga_cli(const std::string& args) {
  const std::string cmd = std::string(QDGA_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void check_parse_error(const std::string& text, int line, int column) {
  try {
    (void)parse_document(text);
    FAIL("no ParseError for:\n" << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("documents parse into presentations and finite algebras", "[cli]") {
  const auto doc = parse_document("format: 1\nflavor: commutative\ngenerators: a:2 b:3\nd b = a^2  # comment\n");
  const auto& p = std::get<Presentation>(doc);
  CHECK(p.size() == 2);
  CHECK(p.differential_of(1) == parse_element(p, "a a"));

  const auto fin = parse_document(
      "format: 1\nkind: finite\nflavor: commutative\nbasis: 1:0 e:1 f:2 g:3\nmul e f = g\nmul f e = g\nd e = f\n");
  const auto& f = std::get<FiniteDGAlgebra>(fin);
  CHECK(f.dim() == 4);
  CHECK(f.unit_index() == 0);

  const auto aug = parse_document("format: 1\nflavor: commutative\ngenerators: x:0\naugmentation: x = 1/2\n");
  CHECK(std::get<Presentation>(aug).augmentation_overrides().at(0) == Rational(1, 2));
}

TEST_CASE("parse errors carry line and column", "[cli]") {
  check_parse_error("generators: x:1\n", 1, 1);
  check_parse_error("format: 2\n", 1, 9);
  check_parse_error("format: 1\ngenerators: x:2 y:1\nd y = x + * x\n", 3, 11);
  check_parse_error("format: 1\ngenerators: x:2\nd q = x\n", 3, 3);
  check_parse_error("format: 1\ngenerators: x:two\n", 2, 15);
  check_parse_error("format: 1\nflavor: weird\n", 2, 9);
  check_parse_error("format: 1\ngenerators: x:2\naugmentation: x = 1\n", 3, 15);
  check_parse_error("format: 1\nkind: finite\nbasis: 1:0 e:1\nmul e e = h\n", 4, 11);
}

TEST_CASE("validation runs on parsed documents", "[cli]") {
  CHECK_THROWS_AS(parse_document("format: 1\ngenerators: x:2 y:2\nd y = x\n"), ValidationError);
  CHECK_THROWS_AS(parse_document("format: 1\nkind: finite\nflavor: commutative\nbasis: 1:0 e:1\nmul e e = 1\n"),
                  ValidationError);
}

TEST_CASE("builtins resolve", "[cli]") {
  const auto sz = std::get<FiniteDGAlgebra>(resolve_document("builtin:squarezero-3-1"));
  CHECK(sz.dim() == 4);
  CHECK(std::get<Presentation>(resolve_document("builtin:S2")).size() == 2);
  CHECK(std::get<Presentation>(resolve_document("builtin:Tx3")).flavor() == Flavor::Associative);
  CHECK_THROWS_AS(resolve_document("builtin:nope"), ParseError);
}

TEST_CASE("cohomology command", "[cli]") {
  const auto r = qdga_cli("cohomology --input " + fixture_path("S3.dga") + " --format json");
  CHECK(r.exit_code == 0);
  for (const char* row : {"\"0\",\n          \"1\"", "\"3\",\n          \"1\""}) CHECK(r.out.find(row) != std::string::npos);
  const auto empty = qdga_cli("cohomology --input " + fixture_path("empty.dga") + " --window 0:0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  const auto bad = qdga_cli("cohomology --input " + fixture_path("bad-expression.dga"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("5:11") != std::string::npos);
  CHECK(qdga_cli("cohomology --input /nonexistent.dga").exit_code == 2);
  CHECK(qdga_cli("bar --input builtin:S3 --window 4:1").exit_code == 2);
  CHECK(qdga_cli("frobnicate").exit_code == 2);
  CHECK(qdga_cli("minimal-model --input builtin:lambda-x0").exit_code == 3);
  CHECK(qdga_cli("verify lurie").exit_code == 0);
  CHECK(qdga_cli("verify injectivity --input builtin:S3 --window 0:4").exit_code == 0);
}

TEST_CASE("window from the environment", "[cli]") {
  const auto r = qdga_cli("bar --input builtin:S3 --format json");
  const auto env = qdga_cli("bar --input builtin:S3 --format json --window 0:6");
  CHECK(r.out == env.out);
  const auto narrow = qdga_cli("bar --input builtin:S3 --format json --window 0:2");
  const auto from_env = qdga_cli("bar --input builtin:S3 --format json").out;
  CHECK(narrow.out != from_env);
  const std::string cmd = "QDGA_WINDOW=0:2 " + std::string(QDGA_CLI) + " bar --input builtin:S3 --format json";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out == narrow.out);
}

TEST_CASE("json output is byte-identical across runs and thread counts", "[cli]") {
  const std::string args = "hochschild --input " + fixture_path("S2.dga") + " --format json";
  const auto a = qdga_cli(args + " --threads 1");
  const auto b = qdga_cli(args + " --threads 4");
  const auto c = qdga_cli(args + " --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

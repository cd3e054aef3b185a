#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cherednik/cli.hpp"

using namespace cherednik;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normalize prints the canonical form and exits 0") {
  CliResult r = run({"normalize", "y1*x", "--c", "tau", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "verifier 1.0.0  field=Q  c=tau\n"
        "PASS  normalize\n"
        "      input: y1*x\n"
        "      normal form (default order): 1 + x*y1\n"
        "overall: pass\n");
  CHECK(r.err.empty());
}

TEST_CASE("the triangular order is selectable") {
  CliResult r = run({"normalize", "e*f", "--order", "triangular", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("normal form (triangular order): h + f*e") != std::string::npos);
}

TEST_CASE("commutator subcommand") {
  CliResult r = run({"commutator", "Delta", "x", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[Delta, x] = -3*x + 2*h*x + 4*e*y") != std::string::npos);
}

TEST_CASE("fg-table prints the degree law and the first rows") {
  CliResult r = run({"fg-table", "2", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "verifier 1.0.0  field=Q  c=0\n"
        "PASS  fg-table\n"
        "      degree law: F(Delta^n) has Delta-degree n-1 with leading "
        "coefficient n (n >= 1); checked for every row\n"
        "      F(Delta^1) = 1\n"
        "      G(Delta^1) = -3\n"
        "      F(Delta^2) = 2 + 2*Delta\n"
        "      G(Delta^2) = -9 - 10*Delta\n"
        "overall: pass\n");
}

TEST_CASE("exit codes separate verification failures from input errors") {
  CHECK(run({"jacobi", "--c", "Delta + 3*tau^2"}).exit_code == 0);
  CHECK(run({"jacobi", "--c", "Delta"}).exit_code == 1);
  CHECK(run({"jacobi", "--c", "Delta ** 2"}).exit_code == 2);
  CHECK(run({"no-such-subcommand"}).exit_code == 2);
  CHECK(run({"alpha-m", "0", "--c", "tau"}).exit_code == 2);
}

TEST_CASE("a failing jacobi reports the residual") {
  CliResult r = run({"jacobi", "--c", "Delta", "--no-timing"});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL  jacobi-residual") != std::string::npos);
  CHECK(r.out.find("residual = 6") != std::string::npos);
  CHECK(r.out.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("syntax errors carry position information on stderr") {
  CliResult r = run({"normalize", "x ** 2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("1:4") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("json output mirrors the text records") {
  CliResult text = run({"pbw-check", "--c", "tau", "--no-timing"});
  CliResult json = run({"pbw-check", "--c", "tau", "--no-timing", "--json"});
  CHECK(text.exit_code == 0);
  CHECK(json.exit_code == 0);
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["field"] == "Q");
  CHECK(doc["c"] == "tau");
  CHECK(doc["overall"] == "pass");
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["name"] == "pbw-jacobi-triples");
  CHECK(doc["checks"][0]["status"] == "pass");
  // The same record name appears in the text form.
  CHECK(text.out.find("PASS  pbw-jacobi-triples") != std::string::npos);
}

TEST_CASE("--out writes the report to a file instead of stdout") {
  const char* path = "cli_out_test.json";
  CliResult r = run({"jacobi", "--c", "tau", "--json", "--no-timing", "--out", path});
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["overall"] == "pass");
  std::remove(path);
}

TEST_CASE("prime field selection is restricted to the supported primes") {
  CHECK(run({"modp", "--p", "2", "--c", "tau", "--no-timing"}).exit_code == 0);
  CHECK(run({"modp", "--p", "5", "--c", "tau", "--no-timing"}).exit_code == 0);
  CHECK(run({"modp", "--p", "7", "--c", "tau", "--no-timing"}).exit_code == 2);
  CHECK(run({"modp", "--p", "4", "--c", "tau", "--no-timing"}).exit_code == 2);
}

TEST_CASE("fg subcommand cross-checks the extraction oracle") {
  CliResult r = run({"fg", "Delta^2", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("F = 2 + 2*Delta") != std::string::npos);
  CHECK(r.out.find("G = -9 - 10*Delta") != std::string::npos);
  CHECK(r.out.find("PASS  fg-extract-agrees") != std::string::npos);
}

TEST_CASE("center-d reports the candidate classification") {
  CliResult r = run({"center-d", "--c", "tau", "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("z = -1/2*Delta + tau + 1/2*tau^2") != std::string::npos);
  CHECK(r.out.find("pure-tau offset") != std::string::npos);
}

TEST_CASE("finite-dim verdict drives the exit code") {
  CHECK(run({"finite-dim", "--c", "0", "--lambda", "2", "--mu", "7",
             "--m-max", "2", "--no-timing"}).exit_code == 0);
  CHECK(run({"finite-dim", "--c", "tau", "--lambda", "2", "--mu", "7",
             "--m-max", "2", "--no-timing"}).exit_code == 1);
}

TEST_CASE("prime fields flow through the common flags") {
  CHECK(run({"jacobi", "--c", "Delta", "--field", "fp"}).exit_code == 2);
  // The rational residual 6 vanishes mod 3, so c = Delta is admissible there.
  CliResult r = run({"jacobi", "--c", "Delta", "--field", "fp", "--p", "3",
                     "--no-timing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("field=F3") != std::string::npos);
  // ... but not mod 5.
  CHECK(run({"jacobi", "--c", "Delta", "--field", "fp", "--p", "5"}).exit_code == 1);
}

}  // TEST_SUITE

#include "doctest.h"

#include "json.hpp"

#include "cherednik/report.hpp"

using namespace cherednik;

namespace {

Report sample() {
  Report r;
  r.field_name = "Q";
  r.c_text = "tau";
  r.add({"zeta-check", true, {"w = 1"}, 12.5});
  r.add({"alpha-check", false, {"residual = 3", "second line"}, 1.0});
  return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("records sort by name and overall status aggregates") {
  Report r = sample();
  CHECK_FALSE(r.overall_pass());
  r.sort_by_name();
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].name == "alpha-check");
  CHECK(r.checks[1].name == "zeta-check");

  Report ok;
  ok.field_name = "Q";
  ok.c_text = "0";
  ok.add({"only", true, {}, 0.0});
  CHECK(ok.overall_pass());
}

TEST_CASE("text serialization is stable without timing") {
  Report r = sample();
  r.sort_by_name();
  std::string text = to_text(r, false);
  CHECK(text ==
        "verifier 1.0.0  field=Q  c=tau\n"
        "FAIL  alpha-check\n"
        "      residual = 3\n"
        "      second line\n"
        "PASS  zeta-check\n"
        "      w = 1\n"
        "overall: FAIL\n");
  // With timing enabled the per-check durations appear.
  CHECK(to_text(r, true).find("(12.5 ms)") != std::string::npos);
}

TEST_CASE("json serialization carries the same records as the text form") {
  Report r = sample();
  r.sort_by_name();
  auto doc = nlohmann::json::parse(to_json(r, false));
  CHECK(doc["version"] == kToolVersion);
  CHECK(doc["field"] == "Q");
  CHECK(doc["c"] == "tau");
  CHECK(doc["overall"] == "fail");
  REQUIRE(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["name"] == "alpha-check");
  CHECK(doc["checks"][0]["status"] == "fail");
  CHECK(doc["checks"][0]["witnesses"].size() == 2);
  CHECK(doc["checks"][1]["name"] == "zeta-check");
  CHECK(doc["checks"][1]["status"] == "pass");
  // Timing suppressed: no time_ms key.
  CHECK_FALSE(doc["checks"][0].contains("time_ms"));
  auto timed = nlohmann::json::parse(to_json(r, true));
  CHECK(timed["checks"][0].contains("time_ms"));
}

}  // TEST_SUITE

#include "cherednik/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace cherednik {

void Report::sort_by_name() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

bool Report::overall_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", ms);
  return buf;
}

}  // namespace

std::string to_text(const Report& r, bool include_timing) {
  std::string out;
  out += "verifier " + std::string(kToolVersion) + "  field=" + r.field_name +
         "  c=" + r.c_text + "\n";
  for (const CheckRecord& c : r.checks) {
    out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name;
    if (include_timing) out += "  (" + format_ms(c.time_ms) + " ms)";
    out += "\n";
    for (const std::string& w : c.witnesses) out += "      " + w + "\n";
  }
  out += std::string("overall: ") + (r.overall_pass() ? "pass" : "FAIL") + "\n";
  return out;
}

std::string to_json(const Report& r, bool include_timing) {
  nlohmann::json j;
  j["version"] = kToolVersion;
  j["field"] = r.field_name;
  j["c"] = r.c_text;
  j["checks"] = nlohmann::json::array();
  for (const CheckRecord& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["witnesses"] = c.witnesses;
    if (include_timing) jc["time_ms"] = c.time_ms;
    j["checks"].push_back(std::move(jc));
  }
  j["overall"] = r.overall_pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace cherednik

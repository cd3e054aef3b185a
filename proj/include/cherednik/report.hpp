#pragma once

#include <string>
#include <vector>

namespace cherednik {

inline constexpr const char* kToolVersion = "1.0.0";

struct CheckRecord {
  std::string name;
  bool pass;
  std::vector<std::string> witnesses;  // printed elements backing the verdict
  double time_ms = 0.0;
};

// One verification run.  Serialization is deterministic given inputs and
// configuration: records are sorted by name and elements print canonically;
// only time_ms varies between runs (suppressed via include_timing = false).
struct Report {
  std::string field_name;
  std::string c_text;
  std::vector<CheckRecord> checks;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void sort_by_name();
  bool overall_pass() const;
};

std::string to_text(const Report& r, bool include_timing = true);
std::string to_json(const Report& r, bool include_timing = true);

}  // namespace cherednik

#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ramond {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ramond-cas/1";
inline constexpr const char* kToolName = "ramond-cas";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
  std::string id;
  Json inputs;
  bool pass = false;
  std::string residue;  // rendering of the nonzero residue, when failed
  std::string note;     // informational outcome (e.g. a resolved constant)
};

/// Result of one verification suite. Check order is deterministic so that
/// reports diff cleanly; timing is excluded from the canonical form.
struct Report {
  std::string suite;
  int bound = 0;
  std::vector<CheckResult> checks;
  double timing_ms = 0.0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }

  /// Full report, timing included.
  Json to_json() const;
  /// Canonical digest form: identical invocations produce byte-identical
  /// output (timing removed).
  Json canonical_json() const;
};

}  // namespace ramond

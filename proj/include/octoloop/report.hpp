#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace octoloop {

/// One machine-readable report line.
struct IdentityRecord {
  std::string suite;
  std::string identity;
  int point_index = 0;
  std::string defect;
  std::string status;  // "pass" | "fail" | "info"
};

/// Aggregated outcome of one identity across all sampled points.
struct IdentityResult {
  std::string identity;
  bool pass = true;
  bool informational = false;
  std::string max_defect = "0";
  int witness_point = -1;   // first failing point, or the max-defect point
  std::string witness;      // tuple description for exhaustive scans
};

struct SuiteReport {
  std::string suite;
  std::string mode;
  uint64_t seed = 0;
  int points = 0;
  int resampled = 0;
  std::vector<IdentityResult> identities;
  std::vector<IdentityRecord> records;
  double wall_seconds = 0.0;  // excluded from serialized records

  bool passed() const {
    for (const auto& r : identities)
      if (!r.informational && !r.pass) return false;
    return true;
  }
};

/// JSON-lines rendering of the records; byte-identical for identical
/// (suite, points, seed, mode).
std::string render_records_jsonl(const SuiteReport& rep);

/// Human summary (includes wall time, so not part of the deterministic
/// record stream).
std::string render_summary(const SuiteReport& rep);

}  // namespace octoloop

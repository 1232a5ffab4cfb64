#include "octoloop/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace octoloop {

std::string render_records_jsonl(const SuiteReport& rep) {
  std::string out;
  for (const auto& rec : rep.records) {
    nlohmann::ordered_json line;
    line["suite"] = rec.suite;
    line["identity"] = rec.identity;
    line["point_index"] = rec.point_index;
    line["defect"] = rec.defect;
    line["status"] = rec.status;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string render_summary(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << ": mode=" << rep.mode << " points=" << rep.points
     << " seed=" << rep.seed;
  if (rep.resampled > 0) os << " resampled=" << rep.resampled;
  os << "\n";
  for (const auto& r : rep.identities) {
    const char* verdict = r.informational ? "info" : (r.pass ? "pass" : "FAIL");
    os << "  " << r.identity;
    for (size_t pad = r.identity.size(); pad < 36; ++pad) os << ' ';
    os << verdict << "  max defect " << r.max_defect;
    if (!r.pass && !r.informational) {
      os << "  (witness point " << r.witness_point;
      if (!r.witness.empty()) os << " " << r.witness;
      os << ")";
    }
    os << "\n";
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", rep.wall_seconds);
  os << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << t
     << "s)\n";
  return os.str();
}

}  // namespace octoloop

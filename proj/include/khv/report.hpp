#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "khv/check_result.hpp"

namespace khv {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
  std::string suite = "all";  // cond1, cond2, np, conclusion, oracle, constants, all
  int p_boxes = 16;
  int depth = 40;
  double target_width = 1e-6;
  int terms = 200;
  std::uint64_t seed = 20251017;
  std::string out_path;  // empty: do not write
  std::string format = "text";  // text or json
};

// Throws DomainError on an invalid field.
void validate(const RunConfig& cfg);

struct Report {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  RunConfig config;
  std::vector<CheckResult> results;
  Status overall = Status::inconclusive;
  double elapsed_ms = 0.0;
  std::string timestamp;  // UTC, ISO 8601
};

// proved iff every result is proved; failed if any failed.
Status overall_status(const std::vector<CheckResult>& results);

// The body leaves out every wall-clock field (timestamp and elapsed times),
// so identical runs give identical bodies.
nlohmann::ordered_json to_json(const Report& r, bool with_timing = true);
Report report_from_json(const nlohmann::ordered_json& j);

std::string serialize_json(const Report& r);
std::string report_body(const Report& r);
Report parse_report(const std::string& text);

// One line per check: name, status, [margin.lo, margin.hi]; children indented.
std::string to_text(const Report& r);

}  // namespace khv

#include "khv/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace khv {

using json = nlohmann::ordered_json;

void validate(const RunConfig& cfg) {
  static const char* suites[] = {"cond1", "cond2", "np", "conclusion", "oracle", "constants", "all"};
  bool known = false;
  for (const char* s : suites) known = known || cfg.suite == s;
  if (!known) throw DomainError("unknown suite '" + cfg.suite + "'");
  if (cfg.format != "text" && cfg.format != "json") throw DomainError("format must be text or json");
  if (cfg.p_boxes < 1) throw DomainError("p_boxes must be >= 1");
  if (cfg.depth < 10) throw DomainError("depth must be >= 10");
  if (!(cfg.target_width > 0)) throw DomainError("target_width must be > 0");
  if (cfg.terms < 8) throw DomainError("terms must be >= 8");
}

Status overall_status(const std::vector<CheckResult>& results) {
  if (results.empty()) return Status::inconclusive;
  bool all = true;
  for (const auto& r : results) {
    if (r.status == Status::failed) return Status::failed;
    all = all && r.status == Status::proved;
  }
  return all ? Status::proved : Status::inconclusive;
}

namespace {

// JSON has no infinities; they travel as strings.
json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double num_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

json interval_json(const Interval& x) { return json{{"lo", num(x.lo())}, {"hi", num(x.hi())}}; }
Interval interval_from(const json& j) { return Interval::raw(num_from(j.at("lo")), num_from(j.at("hi"))); }

json check_json(const CheckResult& r, bool with_timing) {
  json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["margin"] = interval_json(r.margin);
  j["strict"] = r.strict;
  if (r.value) j["value"] = interval_json(*r.value);
  if (!r.note.empty()) j["note"] = r.note;
  j["evaluations"] = r.evaluations;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  json ch = json::array();
  for (const auto& c : r.children) ch.push_back(check_json(c, with_timing));
  j["children"] = std::move(ch);
  return j;
}

CheckResult check_from(const json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.margin = interval_from(j.at("margin"));
  r.strict = j.at("strict").get<bool>();
  if (j.contains("value")) r.value = interval_from(j.at("value"));
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& c : j.at("children")) r.children.push_back(check_from(c));
  return r;
}

void text_lines(const CheckResult& r, int depth, std::ostringstream& os) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.9g, %.9g]", r.margin.lo(), r.margin.hi());
  os << std::string(2 * depth, ' ') << r.name << "  " << to_string(r.status) << "  " << buf << '\n';
  for (const auto& c : r.children) text_lines(c, depth + 1, os);
}

}  // namespace

json to_json(const Report& r, bool with_timing) {
  json j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  const RunConfig& c = r.config;
  j["config"] = json{{"suite", c.suite},     {"p_boxes", c.p_boxes}, {"depth", c.depth},
                     {"target_width", c.target_width}, {"terms", c.terms}, {"seed", c.seed},
                     {"out_path", c.out_path}, {"format", c.format}};
  j["overall"] = to_string(r.overall);
  json res = json::array();
  for (const auto& x : r.results) res.push_back(check_json(x, with_timing));
  j["results"] = std::move(res);
  if (with_timing) {
    j["elapsed_ms"] = r.elapsed_ms;
    j["timestamp"] = r.timestamp;
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion)
    throw DomainError("unsupported report schema_version " + std::to_string(r.schema_version));
  r.tool_version = j.at("tool_version").get<std::string>();
  const json& c = j.at("config");
  r.config.suite = c.at("suite").get<std::string>();
  r.config.p_boxes = c.at("p_boxes").get<int>();
  r.config.depth = c.at("depth").get<int>();
  r.config.target_width = c.at("target_width").get<double>();
  r.config.terms = c.at("terms").get<int>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.config.out_path = c.at("out_path").get<std::string>();
  r.config.format = c.at("format").get<std::string>();
  r.overall = status_from_string(j.at("overall").get<std::string>());
  for (const auto& x : j.at("results")) r.results.push_back(check_from(x));
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::string serialize_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string report_body(const Report& r) { return to_json(r, false).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

std::string to_text(const Report& r) {
  std::ostringstream os;
  char buf[96];
  std::snprintf(buf, sizeof buf, "# khv %s  suite %s  overall %s  %.1f s\n", r.tool_version.c_str(),
                r.config.suite.c_str(), to_string(r.overall), r.elapsed_ms / 1000.0);
  os << buf;
  for (const auto& x : r.results) text_lines(x, 0, os);
  return os.str();
}

}  // namespace khv

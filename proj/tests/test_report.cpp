#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "khv/report.hpp"
#include "khv/run.hpp"

using namespace khv;

namespace {

Report sample() {
  Report r;
  r.config.suite = "constants";
  CheckResult a = leaf("alpha", Interval(0.25, 0.5));
  a.value = Interval(1.0, 2.0);
  a.note = "a note";
  CheckResult b = leaf("beta", Interval(-1e-13, 0.0), false, 3);
  CheckResult c = leaf("gamma", Interval::raw(-INFINITY, 1.0));
  r.results.push_back(composite("group", {a, b}));
  r.results.push_back(c);
  r.overall = overall_status(r.results);
  r.elapsed_ms = 12.5;
  r.timestamp = "2026-01-01T00:00:00Z";
  return r;
}

void expect_same(const CheckResult& x, const CheckResult& y) {
  EXPECT_EQ(x.name, y.name);
  EXPECT_EQ(x.status, y.status);
  EXPECT_EQ(x.margin, y.margin);
  EXPECT_EQ(x.strict, y.strict);
  EXPECT_EQ(x.value.has_value(), y.value.has_value());
  if (x.value && y.value) EXPECT_EQ(*x.value, *y.value);
  EXPECT_EQ(x.note, y.note);
  EXPECT_EQ(x.evaluations, y.evaluations);
  ASSERT_EQ(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < x.children.size(); ++i) expect_same(x.children[i], y.children[i]);
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  Report r = sample();
  Report back = parse_report(serialize_json(r));
  EXPECT_EQ(back.schema_version, kSchemaVersion);
  EXPECT_EQ(back.tool_version, kToolVersion);
  EXPECT_EQ(back.config.suite, "constants");
  EXPECT_EQ(back.config.seed, r.config.seed);
  EXPECT_EQ(back.overall, r.overall);
  EXPECT_EQ(back.timestamp, r.timestamp);
  ASSERT_EQ(back.results.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) expect_same(back.results[i], r.results[i]);
  EXPECT_EQ(serialize_json(back), serialize_json(r));
}

TEST(Report, BodyDropsWallClock) {
  Report r = sample();
  std::string body = report_body(r);
  EXPECT_EQ(body.find("timestamp"), std::string::npos);
  EXPECT_EQ(body.find("elapsed_ms"), std::string::npos);
  r.timestamp = "2030-05-05T00:00:00Z";
  r.elapsed_ms = 99;
  r.results[0].elapsed_ms = 7;
  EXPECT_EQ(report_body(r), body);
}

TEST(Report, RejectsOtherSchemaVersions) {
  auto j = to_json(sample());
  j["schema_version"] = 2;
  EXPECT_ANY_THROW(report_from_json(j));
  EXPECT_ANY_THROW(parse_report("{not json"));
}

TEST(Report, TextHasOneLinePerCheck) {
  std::string t = to_text(sample());
  std::istringstream in(t);
  std::string line;
  int checks = 0;
  bool indented_alpha = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++checks;
    if (line.find("alpha") != std::string::npos) indented_alpha = line[0] == ' ';
  }
  EXPECT_EQ(checks, 4);
  EXPECT_TRUE(indented_alpha);
  EXPECT_NE(t.find("proved"), std::string::npos);
  EXPECT_NE(t.find("inconclusive"), std::string::npos);
}

TEST(Report, OverallAndExitCodes) {
  Report r;
  EXPECT_EQ(overall_status(r.results), Status::inconclusive);
  r.results = {leaf("a", Interval(1.0))};
  r.overall = overall_status(r.results);
  EXPECT_EQ(exit_code(r), 0);
  r.results.push_back(leaf("b", Interval(-1.0, 1.0)));
  r.overall = overall_status(r.results);
  EXPECT_EQ(r.overall, Status::inconclusive);
  EXPECT_EQ(exit_code(r), 2);
  r.results.push_back(leaf("c", Interval(-2.0, -1.0)));
  r.overall = overall_status(r.results);
  EXPECT_EQ(r.overall, Status::failed);
  EXPECT_EQ(exit_code(r), 1);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.suite = "everything";
  EXPECT_THROW(validate(c), DomainError);
  c = RunConfig{};
  c.format = "xml";
  EXPECT_THROW(validate(c), DomainError);
  c = RunConfig{};
  c.depth = 3;
  EXPECT_THROW(validate(c), DomainError);
  c = RunConfig{};
  c.terms = 2;
  EXPECT_THROW(validate(c), DomainError);
  c = RunConfig{};
  c.target_width = 0;
  EXPECT_THROW(validate(c), DomainError);
  c = RunConfig{};
  c.p_boxes = 0;
  EXPECT_THROW(run(c), DomainError);
}

TEST(Run, ConstantsSuite) {
  RunConfig c;
  c.suite = "constants";
  c.format = "json";
  auto path = std::filesystem::temp_directory_path() / "khv_constants_test.json";
  c.out_path = path.string();
  Report r = run(c);
  ASSERT_EQ(r.results.size(), 1u);
  const CheckResult& bp = r.results[0].children[0];
  bool found = false;
  for (const auto& ch : bp.children) found = found || ch.name == "B_2.5 > A_p = 1";
  EXPECT_TRUE(found);
  EXPECT_TRUE(statuses_consistent(r.results[0]));
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  Report back = parse_report(ss.str());
  EXPECT_EQ(report_body(back), report_body(r));
  std::filesystem::remove(path);
}

TEST(Run, UnwritablePathThrows) {
  RunConfig c;
  c.suite = "constants";
  c.out_path = "/nonexistent-dir/khv/report.txt";
  EXPECT_THROW(run(c), std::runtime_error);
}

TEST(Run, OracleSuiteIsDeterministic) {
  RunConfig c;
  c.suite = "oracle";
  EXPECT_EQ(report_body(run(c)), report_body(run(c)));
  RunConfig d = c;
  d.seed = 7;
  EXPECT_NE(report_body(run(d)), report_body(run(c)));
}

TEST(Run, CoarseWidthIsInconclusiveNotFailed) {
  RunConfig c;
  c.suite = "cond2";
  c.target_width = 1e-1;
  c.depth = 10;
  Report r = run(c);
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_NE(r.overall, Status::failed);
  for (const auto& res : r.results) EXPECT_TRUE(statuses_consistent(res));
}

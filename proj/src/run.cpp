#include "khv/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "khv/oracle.hpp"
#include "khv/specfun.hpp"

namespace khv {

VerifierConfig verifier_config(const RunConfig& cfg) {
  VerifierConfig vc;
  vc.p_boxes = cfg.p_boxes;
  vc.depth = cfg.depth;
  vc.target_width = cfg.target_width;
  vc.terms = cfg.terms;
  return vc;
}

namespace {

// Enclosure contains ref (known to 1e-15) and is at most tol wide.
CheckResult anchor(const char* name, const Interval& x, double ref, double tol) {
  const double ref_err = 1e-15;
  double m = std::min({x.hi() - ref + ref_err, ref + ref_err - x.lo(), tol - x.width()});
  char note[96];
  std::snprintf(note, sizeof note, "reference %.16g, width <= %g", ref, tol);
  CheckResult r = leaf(name, Interval(m));
  r.value = x;
  r.note = note;
  return r;
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

CheckResult check_constants() {
  std::vector<CheckResult> bs;
  for (double p : {2.0, 2.25, 2.5, 2.75, 3.0}) {
    Interval B = b_constant(Interval(p)).B;
    char name[48];
    std::snprintf(name, sizeof name, p == 2.0 ? "B_%g >= A_p = 1" : "B_%g > A_p = 1", p);
    CheckResult r = leaf(name, B - Interval(1.0), p != 2.0);
    r.value = B;
    bs.push_back(std::move(r));
  }
  Interval P = pi_interval();
  std::vector<CheckResult> an;
  an.push_back(anchor("Ei(-1)", ei_neg(Interval(-1.0)), -0.21938393439552027, 1e-8));
  an.push_back(anchor("si(pi)", si(P), 0.28114072518756955, 1e-7));
  an.push_back(anchor("ci(pi/2)", ci(P / Interval(2.0)), 0.47200065143956865, 1e-7));
  an.push_back(anchor("zeta(2)", zeta_sum(Interval(2.0)), 1.6449340668482264, 1e-6));
  an.push_back(anchor("zeta(3)", zeta_sum(Interval(3.0)), 1.2020569031595943, 1e-7));
  return composite("constants", {composite("B_p", std::move(bs)), composite("special-function anchors", std::move(an))});
}

Report run(const RunConfig& cfg) {
  validate(cfg);
  VerifierConfig vc = verifier_config(cfg);
  validate(vc);
  Stopwatch sw;
  Report rep;
  rep.config = cfg;
  const std::string& s = cfg.suite;
  bool all = s == "all";
  if (all || s == "constants") rep.results.push_back(check_constants());
  if (all || s == "cond1") rep.results.push_back(check_cond1(vc));
  if (all || s == "cond2") rep.results.push_back(check_cond2(vc));
  if (all || s == "np") rep.results.push_back(check_np(vc));
  if (all || s == "conclusion") rep.results.push_back(check_conclusion(vc));
  if (all || s == "oracle") rep.results.push_back(check_oracle(cfg.seed));
  rep.overall = overall_status(rep.results);
  rep.elapsed_ms = sw.ms();
  rep.timestamp = utc_now();

  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
    out << (cfg.format == "json" ? serialize_json(rep) : to_text(rep));
    out.close();
    if (!out) throw std::runtime_error("write to '" + cfg.out_path + "' failed");
  }
  return rep;
}

int exit_code(const Report& r) {
  if (r.overall == Status::proved) return 0;
  bool failed = r.overall == Status::failed ||
                std::any_of(r.results.begin(), r.results.end(),
                            [](const CheckResult& c) { return c.status == Status::failed; });
  return failed ? 1 : 2;
}

}  // namespace khv

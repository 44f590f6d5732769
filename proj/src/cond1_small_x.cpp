#include <cmath>
#include <cstdio>
#include <limits>

#include "khv/distfn.hpp"
#include "khv/prover.hpp"
#include "khv/series.hpp"
#include "khv/specfun.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

using detail::ge;
using detail::pi;

namespace {

constexpr double kEps = 0.04248;
constexpr double kDelta = 0.06672;
constexpr double kSlope = 0.2115;

// 2.00361 p - ((1+e)^p - (1-e)^p)/e, from the binomial series
// p + C(p,3) e^2 + R with |R| <= e^4/(1-e^2) (|C(p,j)| <= 1 for j >= 3, p in [2,3]).
template <class T>
T binomial_margin(const T& e, const T& p) {
  T c3 = p * (p - 1.0) * (p - 2.0) / 6.0;
  Interval eb = base(e);
  Interval r = pown(eb, 4) / (Interval(1.0) - sqr(eb));
  T rem = series::lift<T>(Interval::raw(-r.hi(), r.hi()));
  return 0.00361 * p - 2.0 * c3 * e * e - 2.0 * rem;
}

Interval d_p(const Interval& p, int K) {
  Interval q = p + Interval(1.0);
  Interval two_over_pi = Interval(2.0) / pi();
  return Interval(2.02) * pow_real(two_over_pi, q) * (Interval(1.0) - pow_real(Interval(2.0), -q)) *
         zeta_sum(q, K);
}

}  // namespace

CheckResult check_cond1_small_x(double rho, const VerifierConfig& cfg) {
  if (!(rho > 0 && rho <= 0.1)) throw DomainError("rho must lie in (0, 0.1]");
  Interval R(rho);
  Interval half_pi = pi() / Interval(2.0);
  Interval shift = half_pi - arccos(R);  // pi/2 - arccos(x) at x = rho, the largest one
  ProveConfig pc = detail::prove_config(cfg);
  std::vector<CheckResult> ch;

  ch.push_back(ge("eps_0 <= 0.04248", Interval(kEps), shift / half_pi));
  ch.push_back(ge("pi/2 - arccos(rho) <= 0.06672", Interval(kDelta), shift));

  ch.push_back(prove_nonneg(
      "(1+e)^p - (1-e)^p <= 2.00361 p e",
      [](const auto& e, const auto& p) { return binomial_margin(e, p); }, Interval(0.0, kEps),
      Interval(2.0, 3.0), pc));

  Interval sine_ratio = Interval(kDelta) / sin(Interval(kDelta));
  ch.push_back(prove_nonneg(
      "t <= (0.06672/sin 0.06672) sin t",
      [sine_ratio](const auto& t) { return sine_ratio * sin(t) - t; }, Interval(0.0, kDelta),
      detail::prove_config(cfg, false)));

  Interval e2 = sqr(Interval(kEps));
  ch.push_back(ge("2.00361/(1-0.04248^2)^3 <= 2.0145", Interval(2.0145),
                  Interval(2.00361) / pown(Interval(1.0) - e2, 3)));
  ch.push_back(ge("2.0145 * 0.06672/sin(0.06672) <= 2.02", Interval(2.02), Interval(2.0145) * sine_ratio));

  Interval d2 = d_p(Interval(2.0), 10000), d3 = d_p(Interval(3.0), 10000);
  ch.push_back(detail::with_value(ge("d_2 <= 0.5482", Interval(0.5482), d2), d2));
  ch.push_back(detail::with_value(ge("d_3 <= 0.3367", Interval(0.3367), d3), d3));

  ch.push_back(over_p_boxes("d_p <= 0.98 - 0.2115 p", cfg.p_boxes, [&](const Interval& box) {
    auto f = [](const Interval& p) { return Interval(0.98) - Interval(kSlope) * p - d_p(p, 1000); };
    return prove_nonneg_natural("", f, box, pc);
  }));

  ch.push_back(prove_nonneg(
      "p (0.98 - 0.2115 p) <= 1.14", [](const auto& p) { return 1.14 - p * (0.98 - kSlope * p); },
      Interval(2.0, 3.0), pc));

  // For x <= rho, t = ln(1/x) >= ln(1/rho); e^t/(2t)^{p/2} increases for t >= p/2.
  ch.push_back(ge("ln(1/rho) >= 2.7", ln(Interval(1.0) / R), Interval(2.7)));
  ch.push_back(prove_nonneg(
      "e^t/(2t)^{p/2} increasing for t >= 2.7", [](const auto& t, const auto& p) { return 1.0 - p / (2.0 * t); },
      Interval(2.7, 1e6), Interval(2.0, 3.0), pc));
  CheckResult anchor = prove_nonneg(
      "e^2.7/5.4^{p/2} >= 1.14",
      [](const auto& p) { return exp(Interval(2.7)) * exp(-(p * 0.5) * ln(Interval(5.4))) - 1.14; },
      Interval(2.0, 3.0), pc);
  Interval at3 = exp(Interval(2.7)) / pow_real(Interval(5.4), Interval(1.5));
  anchor.value = at3;
  anchor.note = "value at p=3 is " + to_string(at3) + "; a bound of 1.8 holds only for p near 2";
  ch.push_back(std::move(anchor));

  // Redundant: F_* < G_* at 30 grid points of (0, rho], for every p-box.
  int K = cfg.terms;
  ch.push_back(over_p_boxes("direct G_* - F_* > 0 on grid", cfg.p_boxes, [&](const Interval& box) {
    std::vector<CheckResult> pts;
    for (int i = 1; i <= 30; ++i) {
      Interval x = i == 30 ? R : Interval(rho * i / 30.0);
      auto f = [&](const Interval& p) {
        MeasureParams mp(p);
        return g_star(x, mp) - f_star(x, mp, K);
      };
      pts.push_back(prove_nonneg_natural("x = " + to_string(x), f, box, pc));
    }
    return composite("", std::move(pts));
  }));
  // Redundant: F_* <= d_p x at the same x grid for p on a coarse grid.
  {
    std::vector<CheckResult> pts;
    for (double p : {2.0, 2.25, 2.5, 2.75, 3.0}) {
      MeasureParams mp{Interval(p)};
      Interval d = d_p(Interval(p), 10000);
      Interval worst(std::numeric_limits<double>::infinity());
      for (int i = 1; i <= 30; ++i) {
        Interval x = i == 30 ? R : Interval(rho * i / 30.0);
        Interval m = d * x - f_star(x, mp, K);
        if (m.lo() < worst.lo()) worst = m;
      }
      char buf[48];
      std::snprintf(buf, sizeof buf, "p = %.4g", p);
      pts.push_back(leaf(buf, worst, true, 30));
    }
    ch.push_back(composite("direct F_* <= d_p x on grid", std::move(pts)));
  }

  CheckResult r = composite("cond1.small-x", std::move(ch));
  char buf[64];
  std::snprintf(buf, sizeof buf, "rho = %.6g", rho);
  r.note = buf;
  return r;
}

}  // namespace khv

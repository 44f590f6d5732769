#include <cmath>
#include <cstdio>
#include <vector>

#include "khv/prover.hpp"
#include "khv/quad.hpp"
#include "khv/series.hpp"
#include "khv/specfun.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

using detail::ge;
using detail::pi;

namespace {

// Constants for x^sqrt2 <= a x^2 + b x + c on the two x ranges. The
// second constant term is 0.0439: with 0.04399 the bound fails at both ends.
constexpr double kSecant = 0.126;
constexpr double kLin2 = 0.6355;
constexpr double kConst2 = 0.0439;

Interval quarter_pi() { return pi() / Interval(4.0); }

CheckResult piece_a(const VerifierConfig& cfg) {
  ProveConfig weak = detail::prove_config(cfg, false);
  Interval r2 = sqrt2();
  Interval a = quarter_pi();
  std::vector<CheckResult> ch;

  // |cos t|^sqrt2 <= exp(-t^2/sqrt2 - t^4/(6 sqrt2) - sqrt2 t^6/45): the -ln cos t
  // series has positive coefficients.
  ch.push_back(prove_nonneg_natural(
      "-ln cos t >= t^2/2 + t^4/12 + t^6/45", [](const Interval& t) { return series::lncos_rem(t, 4); },
      Interval(0.0, a.hi()), weak));
  ch.push_back(prove_nonneg("1 - exp(-b) >= b - b^2/2", [](const auto& b) { return -expm1(-b) - b + 0.5 * b * b; },
                            Interval(0.0, 1.0), weak));

  // Dividing by t^3 leaves exp(-t^2/sqrt2)(alpha t + beta t^3); u = t^2/sqrt2.
  Interval alpha = r2 / Interval(12.0);
  Interval inner = r2 / Interval(12.0) + r2 / Interval(45.0) * sqr(a);
  Interval beta = r2 / Interval(45.0) - Interval(0.5) * sqr(a) * sqr(inner);
  Interval U = sqr(a) / r2;
  Interval eu = exp(-U);
  Interval v = r2 / Interval(2.0) *
               (alpha * (Interval(1.0) - eu) + beta * r2 * (Interval(1.0) - eu * (Interval(1.0) + U)));
  ch.push_back(detail::with_value(ge("closed form >= 0.03129", v, Interval(0.03129)), v));

  // Redundant: the integral itself.
  std::uint64_t ev = 0;
  Interval direct = detail::mu_range(Interval(2.0), r2, 0.0, a.lo(), cfg, &ev);
  CheckResult d = detail::with_value(ge("quadrature >= closed form", direct, v), direct);
  d.evaluations = ev;
  ch.push_back(std::move(d));

  CheckResult r = composite("h2.A", std::move(ch));
  r.value = v;
  return r;
}

CheckResult piece_b() {
  Interval r2 = sqrt2();
  Interval a = quarter_pi();
  Interval U = sqr(a) / r2;
  Interval v = exp(-U) / (Interval(2.0) * sqr(a)) + ei_neg(-U) / (Interval(2.0) * r2);
  CheckResult r = detail::with_value(ge("h2.B", v, Interval(0.29586)), v);
  r.note = "e^{-U}/(2a^2) + Ei(-U)/(2 sqrt2), a = pi/4, U = a^2/sqrt2";
  return r;
}

// Primitives of 1/t^3, cos t/t^3 and cos^2 t/t^3.
Interval prim0(const Interval& t) { return -Interval(1.0) / (Interval(2.0) * sqr(t)); }
Interval prim1(const Interval& t) {
  return (-cos(t) / sqr(t) + sin(t) / t - ci(t)) / Interval(2.0);
}
Interval prim2(const Interval& t) {
  Interval t2 = Interval(2.0) * t;
  return (-Interval(1.0) / sqr(t) - cos(t2) / sqr(t) + Interval(2.0) * sin(t2) / t - Interval(4.0) * ci(t2)) /
         Interval(4.0);
}

CheckResult quadratic_majorants(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  Interval r2 = sqrt2();
  Interval a2 = r2 - Interval(1.0);
  std::vector<CheckResult> ch;

  // Part 1: f(x) = (sqrt2-1)x^2 + (2-sqrt2)x - x^sqrt2 is concave on (0, 0.25]
  // since sqrt2 x^{sqrt2-2} >= 2 there (the power decreases), so f lies above
  // its secant through 0 and 0.25.
  Interval q(0.25);
  ch.push_back(ge("sqrt2 0.25^{sqrt2-2} >= 2", r2 * pow_real(q, r2 - Interval(2.0)), Interval(2.0)));
  Interval f25 = a2 * sqr(q) + (Interval(2.0) - r2) * q - pow_real(q, r2);
  ch.push_back(ge("secant slope f(0.25)/0.25 >= 0.126", f25 / q, Interval(kSecant)));
  ch.push_back(prove_nonneg_natural(
      "x^sqrt2 <= (sqrt2-1)x^2 + (2-sqrt2-0.126)x directly",
      [a2, r2](const Interval& x) {
        return a2 * sqr(x) + (Interval(2.0) - r2 - Interval(kSecant)) * x - pow_real(x, r2);
      },
      Interval(0.0, 0.25), weak));

  // Part 2: g'''> 0 makes g' convex; with g'(sqrt2/2) <= 0 the set {g' <= 0} is an
  // interval ending at sqrt2/2, so g rises then falls and its minimum is at an end.
  auto g = [a2, r2](const auto& x) { return a2 * x * x + kLin2 * x - kConst2 - pow_real(x, r2); };
  Interval e = r2 / Interval(2.0);
  ch.push_back(ge("g(0.25) >= 0", g(q), Interval(0.0)));
  ch.push_back(ge("g(sqrt2/2) >= 0", g(e), Interval(0.0)));
  Interval gp_end = Interval(2.0) * a2 * e + Interval(kLin2) - r2 * pow_real(e, r2 - Interval(1.0));
  ch.push_back(ge("g'(sqrt2/2) <= 0", Interval(0.0), gp_end));
  ch.push_back(prove_nonneg(
      "g''' > 0",
      [a2, r2](const auto& x) {
        return -(r2 * a2 * (r2 - Interval(2.0))) * pow_real(x, r2 - Interval(3.0));
      },
      Interval(0.25, e.hi()), pc));
  ch.push_back(prove_nonneg_natural("x^sqrt2 <= (sqrt2-1)x^2 + 0.6355x - 0.0439 directly",
                                    [g](const Interval& x) { return g(x); }, Interval(0.25, e.hi()), pc));
  return composite("quadratic majorants of x^sqrt2", std::move(ch));
}

CheckResult piece_c(const VerifierConfig& cfg) {
  Interval r2 = sqrt2();
  Interval a2 = r2 - Interval(1.0);
  Interval P = pi();
  Interval t0 = quarter_pi(), t1 = arccos(Interval(0.25)), t2 = P / Interval(2.0);
  Interval t3 = P - t1, t4 = Interval(3.0) * P / Interval(4.0);
  std::vector<CheckResult> ch;
  ch.push_back(quadratic_majorants(cfg));

  auto seg = [&](const Interval& c2, const Interval& c1, const Interval& c0, const Interval& u,
                 const Interval& v) {
    return c2 * (prim2(v) - prim2(u)) + c1 * (prim1(v) - prim1(u)) + c0 * (prim0(v) - prim0(u));
  };
  Interval b1 = Interval(2.0) - r2 - Interval(kSecant);
  Interval b2(kLin2), c2 = -Interval(kConst2);
  // |cos t| = cos t up to pi/2 and -cos t after; the x range decides the majorant.
  Interval v = seg(a2, b2, c2, t0, t1) + seg(a2, b1, Interval(0.0), t1, t2) +
               seg(a2, -b1, Interval(0.0), t2, t3) + seg(a2, -b2, c2, t3, t4);
  ch.push_back(detail::with_value(ge("bound <= 0.2577", Interval(0.2577), v), v));
  CheckResult r = composite("h2.C", std::move(ch));
  r.value = v;
  return r;
}

CheckResult piece_d() {
  Interval r2 = sqrt2();
  Interval t4 = Interval(3.0) * pi() / Interval(4.0);
  Interval mu = Interval(1.0) / (Interval(2.0) * sqr(t4));
  // The cos^2 primitive vanishes at infinity.
  Interval c2 = -prim2(t4);
  Interval v = pow_real(mu, Interval(1.0) - Interval(1.0) / r2) * pow_real(c2, Interval(1.0) / r2);
  CheckResult r = detail::with_value(ge("h2.D", Interval(0.0667), v), v);
  r.note = "mu(X)^{1-1/sqrt2} (int cos^2 dmu)^{1/sqrt2}, X = (3pi/4, inf), dmu = dt/t^3";
  return r;
}

}  // namespace

CheckResult check_cond2_h2(const VerifierConfig& cfg) {
  CheckResult a = piece_a(cfg);
  CheckResult b = piece_b();
  CheckResult c = piece_c(cfg);
  CheckResult d = piece_d();
  Interval net = *a.value + *b.value - *c.value - *d.value;
  CheckResult n = detail::with_value(leaf("A + B - C - D > 0", net), net);
  std::vector<CheckResult> ch{std::move(a), std::move(b), std::move(c), std::move(d), std::move(n)};

  // Redundant: H(2) by quadrature.
  std::uint64_t ev = 0;
  Interval h = conclusion_integral(Interval(2.0), sqrt2(), cfg, &ev);
  CheckResult hd = detail::with_value(leaf("H(2) directly", h, true, ev), h);
  ch.push_back(std::move(hd));
  return composite("cond2.h2", std::move(ch));
}

// H(P) within H(m) + H'(P)(P - m), m the box midpoint.
CheckResult check_h_direct(const VerifierConfig& cfg) {
  Interval r2 = sqrt2();
  double T = cfg.tail_cutoff;
  return over_p_boxes("cond2.h-direct", cfg.p_boxes, [&](const Interval& box) {
    Stopwatch sw;
    std::uint64_t ev = 0;
    double m = box.mid();
    Interval hm = conclusion_integral(Interval(m), r2, cfg, &ev);
    Interval dh = detail::mu_range_dp(box, r2, 0.0, T, cfg, &ev, 12) + detail::mu_tail_dp(box, r2, T);
    Interval h = hm + dh * (box - Interval(m));
    CheckResult r = detail::with_value(leaf("", h, true, ev), h);
    r.elapsed_ms = sw.ms();
    return r;
  });
}

CheckResult check_cond2(const VerifierConfig& cfg) {
  return composite("cond2", {check_cond2_hprime(cfg), check_cond2_h2(cfg), check_h_direct(cfg)});
}

}  // namespace khv

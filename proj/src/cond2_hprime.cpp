#include <cmath>
#include <cstdio>
#include <vector>

#include "khv/prover.hpp"
#include "khv/quad.hpp"
#include "khv/series.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

using detail::ge;
using detail::pi;

namespace {

constexpr double kLambda = 1.75;
// 1.75 J with J = int cos^2/t^4 over [pi/2, inf) is 0.0433639..., just below
// 0.043369, so the chain runs with this constant.
constexpr double kTailConst = 0.04336;
constexpr double kGaussConst = 0.00705;

using IPoly = std::vector<Interval>;

IPoly pmul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, Interval(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Interval pint01(const IPoly& a) {
  Interval s(0.0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] / Interval(double(k + 1));
  return s;
}

// Lower bound of the [0,1] part: -ln t >= 1 - t, exp(-a) >= 1 - a with
// a = t^2/sqrt2, 1 - exp(-b) >= b - b^2/2 with b = t^4/(6 sqrt2), over t^3.
CheckResult unit_piece(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  Interval r2 = sqrt2();
  std::vector<CheckResult> ch;

  ch.push_back(prove_nonneg_natural(
      "exp(-t^2/sqrt2 - t^4/(6 sqrt2)) >= |cos t|^sqrt2",
      [](const Interval& t) { return series::lncos_rem(t, 3); }, Interval(0.0, 1.0), pc));
  ch.push_back(prove_nonneg("-ln t >= 1 - t", [](const auto& t) { return -ln(t) - (1.0 - t); },
                            Interval(1e-300, 1.0), weak));
  ch.push_back(prove_nonneg("exp(-a) >= 1 - a", [](const auto& a) { return exp(-a) - (1.0 - a); },
                            Interval(0.0, 1.0) / r2, weak));
  Interval bmax = Interval(1.0) / (Interval(6.0) * r2);
  ch.push_back(prove_nonneg("1 - exp(-b) >= b - b^2/2", [](const auto& b) { return -expm1(-b) - b + 0.5 * b * b; },
                            Interval(0.0, bmax.hi()), weak));
  ch.push_back(ge("minorant factors nonnegative", Interval(1.0) - Interval(1.0) / r2, Interval(0.0)));

  IPoly a{Interval(1.0), Interval(-1.0)};
  IPoly b{Interval(1.0), Interval(0.0), -(Interval(1.0) / r2)};
  IPoly c(6, Interval(0.0));
  c[1] = Interval(1.0) / (Interval(6.0) * r2);
  c[5] = -Interval(1.0) / Interval(144.0);
  Interval v = pint01(pmul(pmul(a, b), c));
  ch.push_back(detail::with_value(ge("integral >= 0.0153", v, Interval(0.0153)), v));
  CheckResult r = composite("hprime.[0,1]", std::move(ch));
  r.value = v;
  return r;
}

// Upper bound of the negative [1, pi/2] part through ln t <= t - 1, the secant
// S of exp(-t^2/sqrt2) and a step minorant m of |cos t|^sqrt2:
// int_1^{pi/2} (t-1)(S(t) - m(t))/t^3 dt, in closed form per step.
CheckResult one_piece(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  Interval r2 = sqrt2();
  Interval hp = pi() / Interval(2.0);
  auto f = [&](const Interval& t) { return exp(-sqr(t) / r2); };
  Interval f1 = f(Interval(1.0)), fe = f(hp);
  Interval beta = (fe - f1) / (hp - Interval(1.0));
  Interval alpha0 = f1 - beta;  // S(t) = alpha0 + beta t
  Interval m1 = pow_real(cos(Interval(1.2)), r2), m2 = pow_real(cos(Interval(1.4)), r2);
  std::vector<CheckResult> ch;

  ch.push_back(prove_nonneg("exp(-t^2/sqrt2) convex: 2t^2 - sqrt2 > 0",
                            [](const auto& t) { return 2.0 * t * t - sqrt2(); }, Interval(1.0, hp.hi()), pc));
  ch.push_back(prove_nonneg("ln t <= t - 1", [](const auto& t) { return t - 1.0 - ln(t); },
                            Interval(1.0, hp.hi()), weak));
  ch.push_back(ge("cos t >= cos 1.2 on [1, 1.2]", cos(Interval(1.0, 1.2)), cos(Interval(1.2)), false));
  ch.push_back(ge("cos t >= cos 1.4 on [1.2, 1.4]", cos(Interval(1.2, 1.4)), cos(Interval(1.4)), false));
  // S decreases, so S - m >= 0 on each step follows from the right ends.
  ch.push_back(ge("secant above the step at 1.2", alpha0 + beta * Interval(1.2), m1));
  ch.push_back(ge("secant above the step at 1.4", alpha0 + beta * Interval(1.4), m2));

  // int (t-1)(a + b t)/t^3 = b ln t - (a - b)/t + a/(2t^2).
  auto prim = [](const Interval& a, const Interval& b, const Interval& t) {
    return b * ln(t) - (a - b) / t + a / (Interval(2.0) * sqr(t));
  };
  auto seg = [&](const Interval& m, const Interval& u, const Interval& w) {
    Interval a = alpha0 - m;
    return prim(a, beta, w) - prim(a, beta, u);
  };
  Interval v = -(seg(m1, Interval(1.0), Interval(1.2)) + seg(m2, Interval(1.2), Interval(1.4)) +
                 seg(Interval(0.0), Interval(1.4), hp));
  ch.push_back(detail::with_value(ge("integral >= -0.0147", v, Interval(-0.0147)), v));
  CheckResult r = composite("hprime.[1,pi/2]", std::move(ch));
  r.value = v;
  return r;
}

Interval tail_cos2(const VerifierConfig& cfg, std::uint64_t* evals) {
  double T = cfg.tail_cutoff;
  Interval hp = pi() / Interval(2.0);
  QuadConfig qc = cfg.quad();
  qc.target_width = 0.25 * cfg.target_width;
  QuadResult q = integrate(make_integrand([](const auto& t) { return sqr(cos(t)) / pown(t, 4); }), hp.lo(), T, qc);
  // [hp.lo, hp.hi] is a sliver where the integrand is below 1/6.
  Interval sliver = Interval::raw(-hp.width(), hp.width()) * Interval(1.0 / 6.0);
  // int_T^inf cos^2/t^4 = T^-3/6 + (1/2) int cos 2t/t^4, the latter at most T^-4/2 by parts.
  Interval TT(T);
  Interval main = pown(TT, -3) / Interval(6.0);
  Interval rest = pown(TT, -4) / Interval(2.0);
  if (evals) *evals += q.evaluations;
  return q.value + sliver + main + Interval::raw(-rest.hi(), rest.hi());
}

Interval tail_gauss2(const VerifierConfig& cfg, std::uint64_t* evals) {
  double T = cfg.tail_cutoff;
  Interval hp = pi() / Interval(2.0);
  QuadConfig qc = cfg.quad();
  qc.target_width = 0.25 * cfg.target_width;
  QuadResult q = integrate(make_integrand([](const auto& t) { return exp(-sqr(t) / sqrt2()) / sqr(t); }),
                           hp.lo(), T, qc);
  Interval sliver = Interval::raw(-hp.width(), hp.width());
  // exp(-t^2/sqrt2) <= exp(-T t/sqrt2) for t >= T.
  Interval TT(T);
  Interval b = sqrt2() / TT * pown(TT, -2) * exp(-sqr(TT) / sqrt2());
  if (evals) *evals += q.evaluations;
  return q.value + sliver + Interval::raw(0.0, b.hi());
}

CheckResult tail_piece(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  Interval hp = pi() / Interval(2.0);
  std::vector<CheckResult> ch;

  // ln t/t^{p+1} >= 1.75 (2/pi)^p/t^4 <=> ln t t^{3-p} >= 1.75 (2/pi)^p; the left side
  // increases in t (derivative t^{2-p}(1 + (3-p) ln t)), so t = pi/2 is the worst case.
  ch.push_back(ge("ln(pi/2) (pi/2)^3 >= 1.75", ln(hp) * pown(hp, 3), Interval(kLambda)));
  // Beyond 1e6, ln t > 13 makes this obvious.
  ch.push_back(prove_nonneg(
      "1 + (3-p) ln t >= 0", [](const auto& t, const auto& p) { return 1.0 + (3.0 - p) * ln(t); },
      Interval(hp.lo(), 1e6), Interval(2.0, 3.0), pc));
  // ln t/t^{p-1} = u e^{-u}/(p-1) with u = (p-1) ln t, and u e^{-u} <= 1/e.
  ch.push_back(prove_nonneg("u exp(-u) <= 1/e", [](const auto& u) { return exp(Interval(-1.0)) - u * exp(-u); },
                            Interval(0.0, 50.0), weak));
  ch.push_back(ge("u exp(-u) <= 1/e for u >= 50 (decreasing)", exp(Interval(-1.0)),
                  Interval(50.0) * exp(Interval(-50.0))));

  std::uint64_t evals = 0;
  Interval J = tail_cos2(cfg, &evals);
  CheckResult cj = ge("1.75 int cos^2/t^4 >= 0.04336", Interval(kLambda) * J, Interval(kTailConst));
  cj.value = J;
  cj.evaluations = evals;
  ch.push_back(std::move(cj));

  evals = 0;
  Interval K = tail_gauss2(cfg, &evals);
  CheckResult ck = ge("int exp(-t^2/sqrt2)/t^2 <= 0.00705 e", Interval(kGaussConst) * exp(Interval(1.0)), K);
  ck.value = K;
  ck.evaluations = evals;
  ch.push_back(std::move(ck));

  // (p-1)(2/pi)^p is increasing on [2,3], so p = 2 is the worst case.
  Interval two_pi = Interval(2.0) / pi();
  ch.push_back(ge("0.04336 (2/pi)^2 >= 0.00705", Interval(kTailConst) * sqr(two_pi), Interval(kGaussConst)));
  ch.push_back(prove_nonneg(
      "(p-1)(2/pi)^p increasing: 1 + (p-1) ln(2/pi) >= 0",
      [two_pi](const auto& p) { return 1.0 + (p - 1.0) * ln(two_pi); }, Interval(2.0, 3.0), pc));
  ch.push_back(check_hprime_tail_comparison(kTailConst, cfg.p_boxes));
  return composite("hprime.tail", std::move(ch));
}

}  // namespace

CheckResult check_hprime_tail_comparison(double c, int n) {
  Interval two_pi = Interval(2.0) / pi();
  Interval C(c);
  char name[96];
  std::snprintf(name, sizeof name, "%.6g (2/pi)^p >= 0.00705/(p-1)", c);
  return over_p_boxes(name, n, [&](const Interval& box) {
    return prove_nonneg(
        "", [&](const auto& p) { return C * exp(p * ln(two_pi)) - kGaussConst / (p - 1.0); }, box, ProveConfig{});
  });
}

CheckResult check_cond2_hprime(const VerifierConfig& cfg) {
  CheckResult a = unit_piece(cfg);
  CheckResult b = one_piece(cfg);
  CheckResult tail = tail_piece(cfg);
  Interval sum = *a.value + *b.value;
  CheckResult s = detail::with_value(leaf("[0,1] + [1,pi/2] pieces > 0", sum), sum);
  return composite("cond2.hprime", {std::move(a), std::move(b), std::move(tail), std::move(s)});
}

}  // namespace khv

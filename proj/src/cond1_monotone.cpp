#include <cstdio>
#include <type_traits>
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

// All checks of the monotone region run to this endpoint, which lies just
// beyond arccos(1/15).
constexpr double kTEnd = 1.50412;
// Below this t the direct check has no usable margin (the ratio minus 1
// vanishes like t^3); the polynomial chain covers that part.
constexpr double kDirectFrom = 0.01;

template <class T>
T ratio13(const T& t, const T& p) {
  T L = 2.0 * series::neg_ln_cos(t);
  T e = (p + 1.0) * 0.5;
  T a = exp(e * ln(L / (t * t)));
  T b = exp(e * ln(L / sqr(pi() - t)));
  return (a + b) * sqrt(L) * cos(t) / sin(t);
}

// Exact comparison of integer polynomials (coefficients by ascending power).
using Poly = std::vector<long long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Poly neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

CheckResult identity(std::string name, const Poly& lhs, const Poly& rhs) {
  bool same = add(lhs, neg(rhs)) == Poly{0};
  CheckResult r = leaf(std::move(name), same ? Interval(0.0) : Interval(-1.0), false);
  r.note = same ? "coefficients agree exactly" : "coefficients differ";
  return r;
}

// -ln cos t >= (series part) on [0, 0.5] via the remainder form, directly beyond.
template <class Direct>
CheckResult series_then_direct(const std::string& name, int m, const Direct& direct, const ProveConfig& pc) {
  auto rem = [m](const Interval& t) { return series::lncos_rem(t, m); };
  return composite(name, {prove_nonneg_natural("series form on [0, 0.5]", rem, Interval(0.0, 0.5), pc),
                          prove_nonneg("direct on [0.5, 1.50412]", direct, Interval(0.5, kTEnd), pc)});
}

template <class T>
T g_case2(const T& t) {
  return 1.0 / pown(t, 3) + 1.0 / pown(pi() - t, 3);
}

template <class T>
T f_case2(const T& t) {
  return tan(t) / sqr(2.0 * series::neg_ln_cos(t));
}

}  // namespace

Interval derivative_ratio_lower(const Interval& t, const Interval& p) {
  if (!(t.lo() > 0) || !(t.hi() < 1.5707963267948966)) throw DomainError("t must lie in (0, pi/2)");
  return ratio13(t, p);
}

CheckResult check_reduction_to_p2(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  std::vector<CheckResult> ch;

  ch.push_back(series_then_direct(
      "A >= 1: -ln cos t >= t^2/2", 2,
      [](const auto& t) { return series::neg_ln_cos(t) - 0.5 * t * t; }, pc));

  ch.push_back(prove_nonneg(
      "t^4 coefficient positive on [0, pi/2]",
      [](const auto& t) {
        auto b = 1.0 / 6.0 + (2.0 / 45.0) * t * t;
        return Interval(2.0) / Interval(45.0) - 0.5 * b * b;
      },
      Interval(0.0, (pi() / Interval(2.0)).hi()), pc));
  ch.push_back(series_then_direct(
      "-2 ln cos t / t^2 >= 1 + t^2/6 + 2t^4/45", 4,
      [](const auto& t) {
        auto t2 = t * t;
        return 2.0 * series::neg_ln_cos(t) / t2 - (1.0 + t2 / 6.0 + (2.0 / 45.0) * t2 * t2);
      },
      pc));
  ch.push_back(prove_nonneg(
      "ln(1+x) >= x - x^2/2", [](const auto& x) { return log1p(x) - x + 0.5 * x * x; }, Interval(0.0, 1.0),
      weak));

  ch.push_back(prove_nonneg(
      "t ln((pi-t)/t) concave",
      [](const auto& t) { return 1.0 / (pi() - t) + pi() / sqr(pi() - t) + 1.0 / t; },
      Interval(1e-300, kTEnd), pc));
  Interval phi1 = ln(pi() - Interval(1.0));
  Interval dphi1 = phi1 - Interval(1.0) / (pi() - Interval(1.0)) - Interval(1.0);
  ch.push_back(prove_nonneg(
      "quadratic above the tangent at t0 = 1",
      [phi1, dphi1](const auto& t) {
        Interval P = pi();
        return pown(P, 3) - 3.0 * sqr(P) * t + 3.0 * P * t * t - 12.0 * (phi1 + dphi1 * (t - 1.0));
      },
      Interval(0.0, kTEnd), pc));
  ch.push_back(prove_nonneg(
      "pi^3 - 3pi^2 t + 3pi t^2 >= 12 t ln((pi-t)/t) directly",
      [](const auto& t) {
        Interval P = pi();
        return pown(P, 3) - 3.0 * sqr(P) * t + 3.0 * P * t * t - 12.0 * t * ln((P - t) / t);
      },
      Interval(1e-300, kTEnd), pc));

  // Redundant: the hypothesis (A/B)^3 ln A >= -ln B itself.
  ch.push_back(prove_nonneg(
      "(pi-t)^3 ln A^2 + t^3 ln B^2 >= 0 directly",
      [](const auto& t) {
        auto L = 2.0 * series::neg_ln_cos(t);
        return pown(pi() - t, 3) * ln(L / (t * t)) + pown(t, 3) * ln(L / sqr(pi() - t));
      },
      Interval(kDirectFrom, kTEnd), pc));

  return composite("cond1.reduction-to-p2", std::move(ch));
}

CheckResult check_case1_polynomials(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  Interval one_pi = Interval(1.0) / pi();
  std::vector<CheckResult> ch;

  // 1/(1-u)^3 - 1 - 3u - 6u^2 = u^3 (10 - 15u + 6u^2)/(1-u)^3 with u = t/pi.
  ch.push_back(composite(
      "1/t^3 + 1/(pi-t)^3 >= (1 + t^3/pi^3 + 3t^4/pi^4 + 6t^5/pi^5)/t^3",
      {identity("1 - (1+3u+6u^2)(1-u)^3 = u^3 (10 - 15u + 6u^2)",
                add(Poly{1}, neg(mul(Poly{1, 3, 6}, mul(Poly{1, -1}, mul(Poly{1, -1}, Poly{1, -1}))))),
                Poly{0, 0, 0, 10, -15, 6}),
       prove_nonneg("10 - 15u + 6u^2 > 0 on [0, 1/pi]",
                    [](const auto& u) { return 10.0 - 15.0 * u + 6.0 * u * u; }, Interval(0.0, one_pi.hi()),
                    pc),
       prove_nonneg(
           "direct on [0.25, 1]",
           [](const auto& t) {
             Interval P = pi();
             return 1.0 / pown(P - t, 3) -
                    (1.0 / pown(P, 3) + 3.0 * t / pown(P, 4) + 6.0 * t * t / pown(P, 5));
           },
           Interval(0.25, 1.0), pc)}));

  // -2 ln cos t / t^2 = P + 2 t^6 R4 with P = 1 + t^2/6 + 2t^4/45 and R4 >= 0, so
  // ((L/t^2)^2 - Y)/t^6 = 2/135 + 4t^2/2025 + 4 P R4 + 4 t^6 R4^2.
  auto remainder_form = [](const Interval& t) {
    Interval t2 = sqr(t);
    Interval R4 = series::lncos_rem(t, 4);
    Interval P = Interval(1.0) + t2 / Interval(6.0) + Interval(2.0) * sqr(t2) / Interval(45.0);
    return Interval(2.0) / Interval(135.0) + Interval(4.0) * t2 / Interval(2025.0) + Interval(4.0) * P * R4 +
           Interval(4.0) * pown(t, 6) * sqr(R4);
  };
  ch.push_back(composite(
      "[-2 ln cos t]^2 >= t^4 (1 + t^2/3 + 7t^4/60)",
      {identity("(90 + 15t^2 + 4t^4)^2 - 8100 (1 + t^2/3 + 7t^4/60) = 120 t^6 + 16 t^8",
                add(mul(Poly{90, 0, 15, 0, 4}, Poly{90, 0, 15, 0, 4}), neg(Poly{8100, 0, 2700, 0, 945})),
                Poly{0, 0, 0, 0, 0, 0, 120, 0, 16}),
       prove_nonneg_natural("remainder form positive on [0, 1]", remainder_form, Interval(0.0, 1.0), pc)}));

  // cot t = 1/t - t/3 - t^3 R(t), R the (increasing) remainder series.
  Interval R1 = Interval(1.0) - Interval(1.0) / Interval(3.0) - cos(Interval(1.0)) / sin(Interval(1.0));
  ch.push_back(composite(
      "cot t >= 1/t - t/3 - t^3/40",
      {detail::with_value(ge("R(1) = 1 - 1/3 - cot 1 <= 1/40", Interval(0.025), R1), R1),
       prove_nonneg_natural("R(t) <= 1/40 on [0, 1]",
                            [](const Interval& t) { return Interval(0.025) - series::cot_rem(t, 2); },
                            Interval(0.0, 1.0), pc)}));

  // Divided forms of the proposition and the corollary; both vanish to third order at 0.
  auto prop = [](const auto& t) {
    Interval P = pi();
    auto a = 1.0 / pown(P, 3) + 3.0 * t / pown(P, 4) + 6.0 * t * t / pown(P, 5);
    auto z = 1.0 - t * t / 3.0 - pown(t, 4) / 40.0;
    return a * z - t / 40.0 - 1.0 / 40.0;
  };
  auto cor = [](const auto& t) {
    return 1.0 / 40.0 + t / 180.0 + t * t / 120.0 - 7.0 * pown(t, 3) / 180.0 + 7.0 * pown(t, 4) / 2400.0;
  };
  ch.push_back(composite(
      "(1 + t^3/pi^3 + 3t^4/pi^4 + 6t^5/pi^5)(1 - t^2/3 - t^4/40) >= 1 - t^2/3 + t^3/40",
      {prove_nonneg("difference / t^3 on [0, 1]", prop, Interval(0.0, 1.0), pc),
       prove_nonneg(
           "direct on [0.1, 1]",
           [](const auto& t) {
             Interval P = pi();
             auto x = 1.0 + pown(t, 3) / pown(P, 3) + 3.0 * pown(t, 4) / pown(P, 4) + 6.0 * pown(t, 5) / pown(P, 5);
             return x * (1.0 - t * t / 3.0 - pown(t, 4) / 40.0) - (1.0 - t * t / 3.0 + pown(t, 3) / 40.0);
           },
           Interval(0.1, 1.0), pc)}));
  ch.push_back(composite(
      "(1 - t^2/3 + t^3/40)(1 + t^2/3 + 7t^4/60) >= 1",
      {identity("(120 - 40t^2 + 3t^3)(60 + 20t^2 + 7t^4) - 7200 = t^3 (180 + 40t + 60t^2 - 280t^3 + 21t^4)",
                add(mul(Poly{120, 0, -40, 3}, Poly{60, 0, 20, 0, 7}), Poly{-7200}),
                Poly{0, 0, 0, 180, 40, 60, -280, 21}),
       prove_nonneg("difference / t^3 on [0, 1]", cor, Interval(0.0, 1.0), pc),
       prove_nonneg(
           "direct on [0.1, 1]",
           [](const auto& t) {
             return (1.0 - t * t / 3.0 + pown(t, 3) / 40.0) * (1.0 + t * t / 3.0 + 7.0 * pown(t, 4) / 60.0) - 1.0;
           },
           Interval(0.1, 1.0), pc)}));

  ch.push_back(prove_nonneg(
      "cot minorant factor 1 - t^2/3 - t^4/40 > 0", [](const auto& t) { return 1.0 - t * t / 3.0 - pown(t, 4) / 40.0; },
      Interval(0.0, 1.0), pc));
  // Product of the three minorants minus 1, divided by t^3:
  // Y (XZ - W)/t^3 + (WY - 1)/t^3 with W = 1 - t^2/3 + t^3/40.
  ch.push_back(prove_nonneg(
      "product of the three minorants >= 1",
      [prop, cor](const auto& t) {
        auto y = 1.0 + t * t / 3.0 + 7.0 * pown(t, 4) / 60.0;
        return y * prop(t) + cor(t);
      },
      Interval(0.0, 1.0), pc));

  return composite("cond1.case1-polynomials", std::move(ch));
}

CheckResult check_case2_convexity(const VerifierConfig& cfg) {
  ProveConfig pc = detail::prove_config(cfg);
  ProveConfig weak = detail::prove_config(cfg, false);
  std::vector<CheckResult> ch;

  // With s = -ln cos t, f'' >= 0 reduces to s^2 - 3s + 3 - 3e^{-2s} >= 0.
  std::vector<CheckResult> conv;
  conv.push_back(prove_nonneg("s^2 - 3s + 3 > 0 on [0, 3]", [](const auto& s) { return s * s - 3.0 * s + 3.0; },
                              Interval(0.0, 3.0), pc));
  conv.push_back(prove_nonneg(
      "e^{2s} >= 1 + 2s + 2s^2 on [0, 3]", [](const auto& s) { return exp(2.0 * s) - 1.0 - 2.0 * s - 2.0 * s * s; },
      Interval(0.0, 3.0), weak));
  conv.push_back(identity("(s^2 - 3s + 3)(1 + 2s + 2s^2) - 3 = s (2s(s-1)^2 + 3 - s)",
                          add(mul(Poly{3, -3, 1}, Poly{1, 2, 2}), Poly{-3}),
                          mul(Poly{0, 1}, add(mul(Poly{0, 2}, mul(Poly{-1, 1}, Poly{-1, 1})), Poly{3, -1}))));
  conv.push_back(prove_nonneg("2s(s-1)^2 + 3 - s > 0 on [0, 3]",
                              [](const auto& s) { return 2.0 * s * sqr(s - 1.0) + 3.0 - s; }, Interval(0.0, 3.0), pc));
  conv.push_back(ge("s > 3: s^2 - 3s + 3 >= 3 > 3e^{-6}", Interval(3.0), Interval(3.0) * exp(Interval(-6.0))));
  // Redundant: f'' from second-order jets on the range where convexity is used.
  conv.push_back(prove_nonneg_natural(
      "f'' > 0 on [1, 1.50412] directly",
      [](const Interval& t) {
        Jet2 x(Jet<Interval, 1>::variable(t, 0));
        x.d[0] = Jet<Interval, 1>(1.0);
        return f_case2(x).d[0].d[0];
      },
      Interval(1.0, kTEnd), pc));
  ch.push_back(composite("f = tan t / [-2 ln cos t]^2 convex", std::move(conv)));

  ch.push_back(prove_nonneg(
      "g = 1/t^3 + 1/(pi-t)^3 convex", [](const auto& t) { return 12.0 / pown(t, 5) + 12.0 / pown(pi() - t, 5); },
      Interval(1.0, kTEnd), pc));

  auto tangent = [](double t0, double x) {
    Interval T0(t0), X(x);
    Interval dg = Interval(-3.0) / pown(T0, 4) + Interval(3.0) / pown(pi() - T0, 4);
    return g_case2(T0) + dg * (X - T0) - f_case2(X);
  };
  struct Probe {
    double t0, x;
  };
  for (Probe pr : {Probe{1.1, 1.0}, Probe{1.1, 1.25}, Probe{1.45, 1.24}, Probe{1.45, kTEnd}}) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "tangent at %.4g above f at %.6g", pr.t0, pr.x);
    ch.push_back(leaf(buf, tangent(pr.t0, pr.x)));
  }
  ch.push_back(prove_nonneg(
      "g - f >= 0 on [1, 1.50412] directly", [](const auto& t) { return g_case2(t) - f_case2(t); },
      Interval(1.0, kTEnd), pc));

  return composite("cond1.case2-convexity", std::move(ch));
}

CheckResult check_cond1_monotone(double rho, const VerifierConfig& cfg) {
  if (!(rho > 0 && rho < 1)) throw DomainError("rho must lie in (0, 1)");
  ProveConfig pc = detail::prove_config(cfg);
  std::vector<CheckResult> ch;
  ch.push_back(ge("endpoint 1.50412 >= arccos(rho)", Interval(kTEnd), arccos(Interval(rho))));
  ch.push_back(check_reduction_to_p2(cfg));
  ch.push_back(check_case1_polynomials(cfg));
  ch.push_back(check_case2_convexity(cfg));
  ch.push_back(leaf("spot t=0.5, p=2", ratio13(Interval(0.5), Interval(2.0)) - Interval(1.0)));
  ch.push_back(leaf("spot t=1.45, p=3", ratio13(Interval(1.45), Interval(3.0)) - Interval(1.0)));

  // Redundant: the ratio itself at the two ends of the p range; the reduction
  // above shows it increases with p.
  for (double pv : {2.0, 3.0}) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "derivative ratio >= 1 directly on [0.01, 1.50412], p = %g", pv);
    ch.push_back(prove_nonneg(
        buf, [pv](const auto& t) { using T = std::decay_t<decltype(t)>;
          return ratio13(t, T(pv)) - 1.0; },
        Interval(kDirectFrom, kTEnd), pc));
  }
  return composite("cond1.monotone", std::move(ch));
}

CheckResult check_cond1(const VerifierConfig& cfg) {
  return composite("cond1", {check_cond1_sign_at_sigma(0.97, cfg), check_cond1_small_x(1.0 / 15.0, cfg),
                             check_cond1_monotone(1.0 / 15.0, cfg)});
}

}  // namespace khv

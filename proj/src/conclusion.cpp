#include <cmath>
#include <cstdio>
#include <type_traits>

#include "khv/quad.hpp"
#include "khv/series.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

using detail::ge;

namespace {

constexpr double kNearZero = 0.25;

// |cos t|^s; the jet form throws when cos t may vanish, which drops the
// quadrature cell back to its crude bound.
template <class T>
T abs_cos_pow(const T& t, const Interval& s) {
  if constexpr (std::is_same_v<T, Interval>) {
    return pow_real(abs(cos(t)), s);
  } else {
    T c = cos(t);
    return exp((0.5 * s) * ln(c * c));
  }
}

// e^{-st^2/2} - |cos t|^s = t^4 e^{-st^2/2} s R2(t) phi1(s t^4 R2(t)),
// R2 the remainder of -ln cos t after t^2/2.
Interval small_t_factor(const Interval& t, const Interval& s) {
  Interval r2 = series::lncos_rem(t, 2);
  Interval y = s * pown(t, 4) * r2;
  return exp(-s * sqr(t) / Interval(2.0)) * s * r2 * series::phi1(y);
}

// -sqrt(t) ln t on [0, v], v <= e^{-2}, where it increases.
Interval sqrt_neg_log(const Interval& t) {
  double v = t.hi();
  if (!(v <= 0.1353)) throw DomainError("sqrt_neg_log: argument beyond e^-2");
  Interval V(v);
  Interval top = -sqrt(V) * ln(V);
  Interval bot = t.lo() > 0 ? -sqrt(Interval(t.lo())) * ln(Interval(t.lo())) : Interval(0.0);
  return Interval::raw(std::max(0.0, bot.lo()), top.hi());
}

QuadConfig quad_for(const VerifierConfig& cfg, int max_depth) {
  QuadConfig q = cfg.quad();
  if (max_depth > 0) q.max_depth = std::min(q.max_depth, max_depth);
  return q;
}

}  // namespace

namespace detail {

Interval mu_range(const Interval& p, const Interval& s, double a, double b, const VerifierConfig& cfg,
                  std::uint64_t* evals, int max_depth) {
  auto fn = [p, s](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    T tp = exp(-(p + Interval(1.0)) * ln(t));
    return (exp(-(s * 0.5) * (t * t)) - abs_cos_pow(t, s)) * tp;
  };
  Integrand g = make_integrand(fn);
  if (a == 0.0) {
    g.near_zero = NearZero{std::min(kNearZero, b), Interval(3.0) - p,
                           [s](const Interval& t) { return small_t_factor(t, s); }};
  }
  QuadResult q = integrate(g, a, b, quad_for(cfg, max_depth));
  if (evals) *evals += q.evaluations;
  return q.value;
}

Interval mu_range_dp(const Interval& p, const Interval& s, double a, double b, const VerifierConfig& cfg,
                     std::uint64_t* evals, int max_depth) {
  auto fn = [p, s](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    T lt = ln(t);
    T tp = exp(-(p + Interval(1.0)) * lt);
    return -lt * (exp(-(s * 0.5) * (t * t)) - abs_cos_pow(t, s)) * tp;
  };
  Integrand g = make_integrand(fn);
  if (a == 0.0) {
    // -ln t t^{3-p} = t^{5/2-p} (-sqrt(t) ln t).
    g.near_zero = NearZero{std::min(0.125, b), Interval(2.5) - p,
                           [s](const Interval& t) { return sqrt_neg_log(t) * small_t_factor(t, s); }};
  }
  QuadResult q = integrate(g, a, b, quad_for(cfg, max_depth));
  if (evals) *evals += q.evaluations;
  return q.value;
}

Interval mu_tail(const Interval& p, const Interval& s, double T) {
  // The gauss part is in [0, g], the |cos|^s part in [0, T^-p/p].
  Interval g = tail_bound_mu_p(TailKind::gauss, s, p, T);
  Interval c = tail_bound_mu_p(TailKind::cos_power, s, p, T);
  return Interval::raw(-c.hi(), g.hi());
}

Interval mu_tail_dp(const Interval& p, const Interval& s, double T) {
  // ln t (|cos t|^s - e^{-st^2/2}) t^{-p-1}; int_T^inf ln t t^{-p-1} = T^{-p}(p ln T + 1)/p^2.
  // For the gauss part ln t <= t and e^{-st^2/2} <= e^{-sTt/2} give 2/(sT) T^{-p} e^{-sT^2/2}.
  Interval TT(T);
  Interval up = pow_real(TT, -p) * (p * ln(TT) + Interval(1.0)) / sqr(p);
  Interval g = Interval(2.0) / (s * TT) * pow_real(TT, -p) * exp(-s * sqr(TT) / Interval(2.0));
  return Interval::raw(-g.hi(), up.hi());
}

}  // namespace detail

Interval conclusion_integral(const Interval& p, const Interval& s, const VerifierConfig& cfg,
                             std::uint64_t* evaluations) {
  if (p.lo() < 2 || p.hi() > 3) throw DomainError("conclusion_integral needs p in [2, 3]");
  if (s.lo() < 1) throw DomainError("conclusion_integral needs s >= 1");
  double T = cfg.tail_cutoff;
  return detail::mu_range(p, s, 0.0, T, cfg, evaluations, -1) + detail::mu_tail(p, s, T);
}

CheckResult check_conclusion_direct(const std::vector<double>& p_grid, const std::vector<double>& s_grid,
                                    const VerifierConfig& cfg) {
  std::vector<CheckResult> ch;
  for (double s : s_grid) {
    if (!(s >= 1.4142135623730951 - 1e-15)) throw DomainError("check_conclusion_direct needs s >= sqrt2");
  }
  for (double p : p_grid) {
    for (double s : s_grid) {
      Stopwatch sw;
      std::uint64_t ev = 0;
      Interval v = conclusion_integral(Interval(p), Interval(s), cfg, &ev);
      char buf[64];
      std::snprintf(buf, sizeof buf, "p = %.4g, s = %.6g", p, s);
      CheckResult r = leaf(buf, v, true, ev);
      r.elapsed_ms = sw.ms();
      ch.push_back(std::move(r));
    }
  }
  return composite("conclusion.direct", std::move(ch));
}

Interval fp_deviation(double p, double s, const VerifierConfig& cfg) {
  if (!(p > 2 && p <= 3)) throw DomainError("fp_deviation needs p in (2, 3]");
  if (!(s >= 2)) throw DomainError("fp_deviation needs s >= 2");
  // (|cos(t/sqrt s)|^s - e^{-t^2/2}) t^{-p-1}; with u = t/sqrt(s) the |cos|^s term is
  // exp(-t^2/2 - (t^4/s) R2(u)).
  Interval P(p), S(s);
  Interval rs = sqrt(S);
  auto fn = [P, S, rs](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    T tp = exp(-(P + Interval(1.0)) * ln(t));
    return (abs_cos_pow(t / rs, S) - exp(-0.5 * (t * t))) * tp;
  };
  Integrand g = make_integrand(fn);
  g.near_zero = NearZero{kNearZero, Interval(3.0) - P, [S, rs](const Interval& t) {
                           Interval r2 = series::lncos_rem(t / rs, 2);
                           Interval y = pown(t, 4) / S * r2;
                           return -exp(-sqr(t) / Interval(2.0)) * (r2 / S) * series::phi1(y);
                         }};
  double T = cfg.tail_cutoff;
  QuadResult q = integrate(g, 0.0, T, cfg.quad());
  Interval c = tail_bound_mu_p(TailKind::cos_power, Interval(1.0), P, T);
  Interval gt = tail_bound_mu_p(TailKind::gauss, Interval(1.0), P, T);
  return q.value + Interval::raw(-gt.hi(), c.hi());
}

Interval fp_limit(double p, const VerifierConfig& cfg) {
  if (!(p > 2 && p <= 3)) throw DomainError("fp_limit needs p in (2, 3]");
  Interval P(p);
  // t^2/2 - 1 + e^{-t^2/2} = (t^4/4) e2(t^2/2).
  auto fn = [P](const auto& t) {
    using T = std::decay_t<decltype(t)>;
    T tp = exp(-(P + Interval(1.0)) * ln(t));
    return (0.5 * (t * t) - 1.0 + exp(-0.5 * (t * t))) * tp;
  };
  Integrand g = make_integrand(fn);
  g.near_zero = NearZero{0.5, Interval(3.0) - P,
                         [](const Interval& t) { return series::e2(sqr(t) / Interval(2.0)) / Interval(4.0); }};
  double T = cfg.tail_cutoff;
  QuadResult q = integrate(g, 0.0, T, cfg.quad());
  Interval TT(T);
  Interval poly = pow_real(TT, Interval(2.0) - P) / (Interval(2.0) * (P - Interval(2.0))) - pow_real(TT, -P) / P;
  Interval gt = tail_bound_mu_p(TailKind::gauss, Interval(1.0), P, T);
  return q.value + poly + Interval::raw(0.0, gt.hi());
}

CheckResult check_fp_convergence(double p, const std::vector<double>& s_list, const VerifierConfig& cfg) {
  if (s_list.empty()) throw DomainError("check_fp_convergence needs a nonempty s_list");
  for (size_t i = 0; i < s_list.size(); ++i) {
    if (!(s_list[i] >= 2)) throw DomainError("check_fp_convergence needs s >= 2");
    if (i > 0 && !(s_list[i] > s_list[i - 1])) throw DomainError("s_list must increase");
  }
  std::vector<CheckResult> ch;
  Interval lim = fp_limit(p, cfg);
  ch.push_back(detail::with_value(leaf("I(inf) > 0", lim), lim));
  std::vector<Interval> dev;
  for (double s : s_list) dev.push_back(fp_deviation(p, s, cfg));
  for (size_t i = 0; i + 1 < dev.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "|I(%g) - I(inf)| > |I(%g) - I(inf)|", s_list[i], s_list[i + 1]);
    ch.push_back(detail::with_value(leaf(buf, abs(dev[i]) - abs(dev[i + 1])), dev[i + 1]));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "I(%g) within 1%% of I(inf)", s_list.back());
  ch.push_back(detail::with_value(leaf(buf, Interval(0.01) * lim - abs(dev.back())), dev.back()));
  CheckResult r = composite("conclusion.fp-convergence", std::move(ch));
  std::snprintf(buf, sizeof buf, "p = %g", p);
  r.note = buf;
  return r;
}

CheckResult check_conclusion(const VerifierConfig& cfg) {
  return composite("conclusion", {check_conclusion_direct({2.1, 2.5, 2.9}, {std::sqrt(2.0), 2.0, 4.0, 16.0}, cfg),
                                  check_fp_convergence(2.5, {4.0, 16.0, 64.0}, cfg)});
}

}  // namespace khv

#include "khv/specfun.hpp"

#include <algorithm>

#include "khv/series.hpp"

namespace khv {

namespace {

// Adds the terms produced by `next` until the remainder can be bounded.
// `next(k)` returns term k (k >= 1); `ratio(k)` bounds |term_{j+1}/term_j|
// for all j >= k and must be nonincreasing in k. Once ratio <= 1/2 the
// remainder after term k is at most twice the magnitude of term k+1.
template <class Next, class Ratio>
Interval sum_series(Next next, Ratio ratio, const SeriesPolicy& policy) {
  if (policy.max_terms < 8 || policy.tail_safety < 1) throw DomainError("invalid series policy");
  Interval sum(0.0);
  Interval term = next(1);
  for (int k = 1; k <= policy.max_terms; ++k) {
    sum += term;
    Interval following = next(k + 1);
    if (ratio(k) <= 0.5 && following.mag() <= 1e-17 * std::max(1.0, sum.mag())) {
      double b = 2.0 * following.mag() * policy.tail_safety;
      return sum + Interval::raw(-b, b);
    }
    term = following;
  }
  throw CapacityError("series did not reach its remainder criterion");
}

Interval ei_point(double x, const SeriesPolicy& policy) {
  Interval X(x);
  // p_k = x^k / k!, term_k = p_k / k.
  Interval p = X;
  int pk = 1;
  auto next = [&](int k) {
    while (pk < k) {
      ++pk;
      p = p * X / Interval(static_cast<double>(pk));
    }
    return p / Interval(static_cast<double>(k));
  };
  auto ratio = [&](int k) { return std::fabs(x) * k / ((k + 1.0) * (k + 1.0)) * (1 + 1e-12); };
  Interval s = sum_series(next, ratio, policy);
  return euler_gamma() + ln(Interval(-x)) + s;
}

Interval si_point(double x, const SeriesPolicy& policy) {
  Interval X(x), X2 = sqr(Interval(x));
  // p_k = x^{2k-1} / (2k-1)!, term_k = (-1)^{k-1} p_k / (2k-1).
  Interval p = X;
  int pk = 1;
  auto next = [&](int k) {
    while (pk < k) {
      p = p * X2 / Interval(2.0 * pk * (2.0 * pk + 1));
      ++pk;
    }
    Interval t = p / Interval(2.0 * k - 1);
    return (k % 2 == 1) ? t : -t;
  };
  auto ratio = [&](int k) {
    double kk = k;
    return x * x * (2 * kk - 1) / ((2 * kk) * (2 * kk + 1) * (2 * kk + 1)) * (1 + 1e-12);
  };
  Interval s = sum_series(next, ratio, policy);
  return s - pi_interval() / Interval(2.0);
}

Interval ci_point(double x, const SeriesPolicy& policy) {
  Interval X2 = sqr(Interval(x));
  // q_k = x^{2k} / (2k)!, term_k = (-1)^k q_k / (2k).
  Interval q = X2 / Interval(2.0);
  int qk = 1;
  auto next = [&](int k) {
    while (qk < k) {
      q = q * X2 / Interval((2.0 * qk + 1) * (2.0 * qk + 2));
      ++qk;
    }
    Interval t = q / Interval(2.0 * k);
    return (k % 2 == 0) ? t : -t;
  };
  auto ratio = [&](int k) {
    double kk = k;
    return x * x * (2 * kk) / ((2 * kk + 1) * (2 * kk + 2) * (2 * kk + 2)) * (1 + 1e-12);
  };
  Interval s = sum_series(next, ratio, policy);
  return euler_gamma() + ln(Interval(x)) + s;
}

// Mean-value enclosure around the midpoint, intersected with the hull of the
// endpoint values widened by the derivative range.
template <class Point, class Deriv>
Interval mean_value(const Interval& x, Point point, Deriv deriv) {
  if (x.is_point()) return point(x.lo());
  double m = x.mid();
  Interval mv = point(m) + deriv(x) * (x - Interval(m));
  return mv;
}

}  // namespace

Interval neg_ln_cos_lower(const Interval& t, int K) {
  if (t.lo() < 0 || t.hi() > 1.55) throw DomainError("neg_ln_cos_lower needs t in [0, 1.55]");
  if (K < 1) throw DomainError("neg_ln_cos_lower needs K >= 1");
  int kk = std::min(K, series::kMaxBernoulli);
  Interval t2 = sqr(t);
  Interval sum(0.0);
  for (int k = kk; k >= 1; --k) sum = (sum + series::lncos_coeff(k)) * t2;
  return sum;
}

std::array<Interval, 3> cos_upper_bounds(const Interval& t) {
  if (t.lo() < 0) throw DomainError("cos_upper_bounds needs t >= 0");
  Interval t2 = sqr(t);
  Interval a = t2 / Interval(2.0);
  Interval b = a + sqr(t2) / Interval(12.0);
  Interval c = b + pown(t2, 3) / Interval(45.0);
  return {exp(-a), exp(-b), exp(-c)};
}

Interval ei_neg(const Interval& x, const SeriesPolicy& policy) {
  if (!(x.hi() < 0)) throw DomainError("ei_neg needs x < 0");
  if (x.lo() < -30 || x.hi() > -1e-6) throw DomainError("ei_neg argument outside [-30, -1e-6]");
  // Ei'(x) = e^x / x < 0 on x < 0: decreasing.
  if (x.is_point()) return ei_point(x.lo(), policy);
  return Interval::raw(ei_point(x.hi(), policy).lo(), ei_point(x.lo(), policy).hi());
}

Interval si(const Interval& x, const SeriesPolicy& policy) {
  if (!(x.lo() > 0) || x.hi() > 50) throw DomainError("si needs x in (0, 50]");
  return mean_value(
      x, [&](double v) { return si_point(v, policy); },
      [](const Interval& X) { return sin(X) / X; });
}

Interval ci(const Interval& x, const SeriesPolicy& policy) {
  if (!(x.lo() > 0) || x.hi() > 50) throw DomainError("ci needs x in (0, 50]");
  return mean_value(
      x, [&](double v) { return ci_point(v, policy); },
      [](const Interval& X) { return cos(X) / X; });
}

namespace {

Interval zeta_point(double q, int K) {
  Interval Q(q);
  Interval sum(0.0);
  bool integer2 = (q == 2.0);
  for (int k = K; k >= 1; --k) {
    Interval kk(static_cast<double>(k));
    sum += integer2 ? recip(sqr(kk)) : exp(-Q * ln(kk));
  }
  Interval qm1 = Q - Interval(1.0);
  Interval lo = exp(-qm1 * ln(Interval(K + 1.0))) / qm1;
  Interval hi = exp(-qm1 * ln(Interval(static_cast<double>(K)))) / qm1;
  return sum + Interval::raw(lo.lo(), hi.hi());
}

// ln Gamma(y) for y >= 10 by Stirling's series with 8 correction terms; the
// remainder is below the first omitted term, which we inflate tenfold.
Interval ln_gamma_large(const Interval& y) {
  Interval half(0.5);
  Interval s = (y - half) * ln(y) - y + half * ln(Interval(2.0) * pi_interval());
  for (int j = 1; j <= 8; ++j) {
    Interval c = series::bernoulli_abs(j) / Interval(2.0 * j * (2.0 * j - 1));
    Interval term = c / pown(y, 2 * j - 1);
    s += (j % 2 == 1) ? term : -term;
  }
  Interval r = series::bernoulli_abs(9) / Interval(18.0 * 17.0) / pown(Interval(y.lo()), 17) *
               Interval(10.0);
  return s + Interval::raw(-r.hi(), r.hi());
}

Interval gamma_natural(const Interval& x) {
  int m = static_cast<int>(std::ceil(10.0 - x.lo()));
  if (m < 0) m = 0;
  Interval y = x + Interval(static_cast<double>(m));
  Interval prod(1.0);
  for (int i = 0; i < m; ++i) prod = prod * (x + Interval(static_cast<double>(i)));
  return exp(ln_gamma_large(y)) / prod;
}

}  // namespace

Interval zeta_sum(const Interval& q, int K) {
  if (!(q.lo() > 1)) throw DomainError("zeta_sum needs q > 1");
  if (q.lo() < 2 || q.hi() > 4.5) throw DomainError("zeta_sum argument outside [2, 4.5]");
  if (K < 1) throw DomainError("zeta_sum needs K >= 1");
  // Decreasing in q.
  if (q.is_point()) return zeta_point(q.lo(), K);
  return Interval::raw(zeta_point(q.hi(), K).lo(), zeta_point(q.lo(), K).hi());
}

Interval gamma(const Interval& x) {
  if (x.lo() < 1 || x.hi() > 10) throw DomainError("gamma implemented on [1, 10]");
  // Gamma is increasing to the right of its minimum near 1.46163.
  if (x.lo() >= 1.4617 && !x.is_point()) {
    return Interval::raw(gamma_natural(Interval(x.lo())).lo(), gamma_natural(Interval(x.hi())).hi());
  }
  return gamma_natural(x);
}

KhintchineConstants b_constant(const Interval& p) {
  if (p.lo() < 2 || p.hi() > 3) throw DomainError("b_constant needs p in [2, 3]");
  Interval g = gamma((p + Interval(1.0)) / Interval(2.0));
  Interval r = g / sqrt(pi_interval());
  Interval B = sqrt2() * exp(ln(r) / p);
  return {Interval(1.0), B};
}

}  // namespace khv

#include "khv/distfn.hpp"

namespace khv {

MeasureParams::MeasureParams(const Interval& p_) : p(p_) {
  if (p.lo() < 2 || p.hi() > 3) throw DomainError("MeasureParams: p must lie in [2, 3]");
  if (p.width() > 1) throw DomainError("MeasureParams: width(p) must be <= 1");
}

namespace {

Interval neg_pow(const Interval& base, const Interval& e) { return pow_real(base, -e); }

void check_open_unit(const Interval& x) {
  if (!(x.lo() > 0) || !(x.hi() < 1)) throw DomainError("argument must lie in (0, 1)");
}

Interval f_star_point(double x, const Interval& p, int K) {
  Interval a = arccos(Interval(x));
  Interval pi = pi_interval();
  Interval sum(0.0);
  for (int k = K - 1; k >= 0; --k) {
    Interval kpi = pi_multiple(k);
    Interval k1pi = pi_multiple(k + 1);
    sum += neg_pow(kpi + a, p) - neg_pow(k1pi - a, p);
  }
  // Remaining terms: each equals p (pi - 2a) xi^{-p-1} for some xi in the
  // term's gap; bracketing the sum of those by integrals gives
  // tail in (pi-2a)/pi * [((K+1)pi - a)^{-p}, ((K-1)pi + a)^{-p}].
  Interval lo = neg_pow(pi_multiple(K + 1) - a, p);
  Interval hi = neg_pow(pi_multiple(K - 1) + a, p);
  Interval scale = (pi - Interval(2.0) * a) / pi;
  Interval tail = scale * Interval::raw(lo.lo(), hi.hi());
  return (sum + tail) / p;
}

Interval g_star_point(double x, const Interval& p) {
  Interval L = Interval(-2.0) * ln(Interval(x));
  return neg_pow(L, p / Interval(2.0)) / p;
}

}  // namespace

Interval f_star(const Interval& x, const MeasureParams& mp, int K) {
  check_open_unit(x);
  if (K < 1) throw DomainError("f_star needs K >= 1");
  // Distribution functions are nondecreasing in x.
  if (x.is_point()) return f_star_point(x.lo(), mp.p, K);
  return Interval::raw(f_star_point(x.lo(), mp.p, K).lo(), f_star_point(x.hi(), mp.p, K).hi());
}

Interval g_star(const Interval& x, const MeasureParams& mp) {
  check_open_unit(x);
  if (x.is_point()) return g_star_point(x.lo(), mp.p);
  return Interval::raw(g_star_point(x.lo(), mp.p).lo(), g_star_point(x.hi(), mp.p).hi());
}

DistDerivatives derivatives(const Interval& x, const MeasureParams& mp, int K, bool k0_only) {
  check_open_unit(x);
  if (K < 1) throw DomainError("derivatives needs K >= 1");
  const Interval& p = mp.p;
  Interval p1 = p + Interval(1.0);
  Interval a = arccos(x);
  Interval pi = pi_interval();
  Interval jac = sqrt(Interval(1.0) - sqr(x));
  Interval sum(0.0);
  int terms = k0_only ? 1 : K;
  for (int k = terms - 1; k >= 0; --k)
    sum += neg_pow(pi_multiple(k) + a, p1) + neg_pow(pi_multiple(k + 1) - a, p1);
  if (!k0_only) {
    Interval ppi = p * pi;
    Interval lo = (neg_pow(pi_multiple(K) + a, p) + neg_pow(pi_multiple(K + 1) - a, p)) / ppi;
    Interval hi = (neg_pow(pi_multiple(K - 1) + a, p) + neg_pow(pi_multiple(K) - a, p)) / ppi;
    sum += Interval::raw(lo.lo(), hi.hi());
  }
  Interval L = Interval(-2.0) * ln(x);
  Interval g = Interval(1.0) / (x * pow_real(L, p / Interval(2.0) + Interval(1.0)));
  return {sum / jac, g};
}

namespace {

// a = arccos y located by bisection on cos t = y over [0, pi/2], using only
// certified comparisons of cos against y.
Interval solve_cos(double y) {
  double lo = 0.0, hi = 1.5707963267948966;
  for (int it = 0; it < 200; ++it) {
    double m = 0.5 * (lo + hi);
    if (m <= lo || m >= hi) break;
    Interval c = cos(Interval(m));
    if (c.lo() > y) lo = m;
    else if (c.hi() < y) hi = m;
    else {
      // cos(m) is within rounding of y; close in from both sides.
      double l = m, h = m;
      for (int j = 0; j < 64; ++j) {
        l = rnd::down(l);
        if (cos(Interval(l)).lo() > y) break;
      }
      for (int j = 0; j < 64; ++j) {
        h = rnd::up(h);
        if (cos(Interval(h)).hi() < y) break;
      }
      return Interval(std::max(l, lo), std::min(h, hi));
    }
  }
  return Interval(lo, hi);
}

// sum_{k >= k0} (k pi + c)^{-p} with the sum from K on bracketed by
// [int_K^inf g + g(K)/2, int_{K-1/2}^inf g] (g convex and decreasing).
Interval shifted_zeta(const Interval& c, const Interval& p, int k0, int K) {
  Interval pi = pi_interval();
  Interval sum(0.0);
  for (int k = K - 1; k >= k0; --k) sum += neg_pow(Interval(static_cast<double>(k)) * pi + c, p);
  Interval pm1 = p - Interval(1.0);
  Interval gK = neg_pow(Interval(static_cast<double>(K)) * pi + c, p);
  Interval lo = neg_pow(Interval(static_cast<double>(K)) * pi + c, pm1) / (pm1 * pi) + gK / Interval(2.0);
  Interval hi = neg_pow(Interval(K - 0.5) * pi + c, pm1) / (pm1 * pi);
  return sum + Interval::raw(lo.lo(), hi.hi());
}

}  // namespace

Interval brute_force_dist(double y, const MeasureParams& mp, DistKind which) {
  if (!(y > 0.01 && y < 0.99)) throw DomainError("brute_force_dist needs y in (0.01, 0.99)");
  const Interval& p = mp.p;
  if (which == DistKind::gauss) {
    Interval tau = sqrt(Interval(2.0) * ln(Interval(1.0) / Interval(y)));
    return neg_pow(tau, p) / p;
  }
  Interval a = solve_cos(y);
  constexpr int K = 2000;
  Interval s1 = shifted_zeta(a, p, 0, K);
  Interval s2 = shifted_zeta(-a, p, 1, K);
  return (s1 - s2) / p;
}

}  // namespace khv

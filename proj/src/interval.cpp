#include "khv/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace khv {

namespace {

using rnd::kInf;

// libm results are assumed accurate to 1 ulp (glibc documents this for the
// functions used here); we step two ulps outward.
double lib_down(double v) {
  if (std::isinf(v)) return v;
  return rnd::down(rnd::down(v));
}

double lib_up(double v) {
  if (std::isinf(v)) return v;
  return rnd::up(rnd::up(v));
}

constexpr double kPiHi = 0x1.921fb54442d18p+1;
constexpr double kPiLo = 1.2246467991473532e-16;  // pi - kPiHi, rounded

Interval clamp_unit(double lo, double hi) {
  return Interval::raw(std::max(lo, -1.0), std::min(hi, 1.0));
}

double pow_down_nonneg(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r = rnd::mul_down(r, x);
  return r;
}

double pow_up_nonneg(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r = rnd::mul_up(r, x);
  return r;
}

}  // namespace

double Interval::mid() const {
  if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
  if (std::isinf(lo_)) return -std::numeric_limits<double>::max();
  if (std::isinf(hi_)) return std::numeric_limits<double>::max();
  double m = 0.5 * lo_ + 0.5 * hi_;
  return std::clamp(m, lo_, hi_);
}

double Interval::mig() const {
  if (contains_zero()) return 0.0;
  return std::fmin(std::fabs(lo_), std::fabs(hi_));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval::raw(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  double lo = std::max(a.lo(), b.lo());
  double hi = std::min(a.hi(), b.hi());
  if (lo > hi) throw DomainError("empty intersection");
  return Interval::raw(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (al >= 0) {
    if (bl >= 0) return Interval::raw(rnd::mul_down(al, bl), rnd::mul_up(ah, bh));
    if (bh <= 0) return Interval::raw(rnd::mul_down(ah, bl), rnd::mul_up(al, bh));
    return Interval::raw(rnd::mul_down(ah, bl), rnd::mul_up(ah, bh));
  }
  if (ah <= 0) {
    if (bl >= 0) return Interval::raw(rnd::mul_down(al, bh), rnd::mul_up(ah, bl));
    if (bh <= 0) return Interval::raw(rnd::mul_down(ah, bh), rnd::mul_up(al, bl));
    return Interval::raw(rnd::mul_down(al, bh), rnd::mul_up(al, bl));
  }
  if (bl >= 0) return Interval::raw(rnd::mul_down(al, bh), rnd::mul_up(ah, bh));
  if (bh <= 0) return Interval::raw(rnd::mul_down(ah, bl), rnd::mul_up(al, bl));
  double lo = std::min(rnd::mul_down(al, bh), rnd::mul_down(ah, bl));
  double hi = std::max(rnd::mul_up(al, bl), rnd::mul_up(ah, bh));
  return Interval::raw(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing 0");
  double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
  if (bl > 0) {
    if (al >= 0) return Interval::raw(rnd::div_down(al, bh), rnd::div_up(ah, bl));
    if (ah <= 0) return Interval::raw(rnd::div_down(al, bl), rnd::div_up(ah, bh));
    return Interval::raw(rnd::div_down(al, bl), rnd::div_up(ah, bl));
  }
  if (al >= 0) return Interval::raw(rnd::div_down(ah, bh), rnd::div_up(al, bl));
  if (ah <= 0) return Interval::raw(rnd::div_down(ah, bl), rnd::div_up(al, bh));
  return Interval::raw(rnd::div_down(ah, bh), rnd::div_up(al, bh));
}

Interval arith(const Interval& a, const Interval& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  throw DomainError("unknown arithmetic kind");
}

Interval elem(const Interval& a, ElemKind kind) {
  switch (kind) {
    case ElemKind::exp: return exp(a);
    case ElemKind::ln: return ln(a);
    case ElemKind::sqrt: return sqrt(a);
    case ElemKind::sin: return sin(a);
    case ElemKind::cos: return cos(a);
    case ElemKind::arccos: return arccos(a);
    case ElemKind::abs: return abs(a);
  }
  throw DomainError("unknown elementary kind");
}

Interval recip(const Interval& a) { return Interval(1.0) / a; }

Interval pown(const Interval& a, int n) {
  if (n < 0) return recip(pown(a, -n));
  if (n == 0) return Interval(1.0);
  if (n == 1) return a;
  if (a.lo() >= 0) return Interval::raw(pow_down_nonneg(a.lo(), n), pow_up_nonneg(a.hi(), n));
  if (a.hi() <= 0) {
    Interval m = pown(-a, n);
    return (n % 2 == 0) ? m : -m;
  }
  // Straddles zero.
  if (n % 2 == 0) {
    double h = std::max(-a.lo(), a.hi());
    return Interval::raw(0.0, pow_up_nonneg(h, n));
  }
  return Interval::raw(-pow_up_nonneg(-a.lo(), n), pow_up_nonneg(a.hi(), n));
}

Interval sqr(const Interval& a) { return pown(a, 2); }

Interval sqrt(const Interval& a) {
  if (a.lo() < 0) throw DomainError("sqrt of negative values");
  return Interval::raw(rnd::sqrt_down(a.lo()), rnd::sqrt_up(a.hi()));
}

Interval exp(const Interval& a) {
  auto lo_of = [](double x) { return x == 0 ? 1.0 : std::max(0.0, lib_down(std::exp(x))); };
  auto hi_of = [](double x) {
    if (x == 0) return 1.0;
    double v = std::exp(x);
    return v == 0 ? 0x1p-1074 : lib_up(v);
  };
  return Interval::raw(lo_of(a.lo()), hi_of(a.hi()));
}

Interval expm1(const Interval& a) {
  auto lo_of = [](double x) { return x == 0 ? 0.0 : std::max(-1.0, lib_down(std::expm1(x))); };
  auto hi_of = [](double x) { return x == 0 ? 0.0 : lib_up(std::expm1(x)); };
  return Interval::raw(lo_of(a.lo()), hi_of(a.hi()));
}

Interval ln(const Interval& a) {
  if (!(a.lo() > 0)) throw DomainError("ln of non-positive values");
  auto lo_of = [](double x) { return x == 1 ? 0.0 : lib_down(std::log(x)); };
  auto hi_of = [](double x) { return x == 1 ? 0.0 : lib_up(std::log(x)); };
  return Interval::raw(lo_of(a.lo()), hi_of(a.hi()));
}

Interval log1p(const Interval& a) {
  if (!(a.lo() > -1)) throw DomainError("log1p of values <= -1");
  auto lo_of = [](double x) { return x == 0 ? 0.0 : lib_down(std::log1p(x)); };
  auto hi_of = [](double x) { return x == 0 ? 0.0 : lib_up(std::log1p(x)); };
  return Interval::raw(lo_of(a.lo()), hi_of(a.hi()));
}

Interval pi_interval() { return Interval::raw(kPiHi, rnd::up(kPiHi)); }

Interval euler_gamma() {
  constexpr double g = 0.57721566490153286061;
  return Interval::raw(rnd::down(g), rnd::up(g));
}

Interval sqrt2() { return sqrt(Interval(2.0)); }

Interval pi_multiple(double j) {
  if (j == 0) return Interval(0.0);
  double h = j * kPiHi;
  double e = std::fma(j, kPiHi, -h);
  double t = e + j * kPiLo;
  // Covers the rounding of t and the truncation of pi after kPiLo.
  double err = std::fabs(j) * 1e-31 + std::fabs(t) * 0x1p-50;
  return Interval::raw(rnd::add_down(h, rnd::sub_down(t, err)), rnd::add_up(h, rnd::add_up(t, err)));
}

Interval cos(const Interval& a) {
  if (!a.is_finite() || a.width() >= 2 * kPiHi || a.mag() > 1e9) return Interval::raw(-1.0, 1.0);
  if (a.is_point() && a.lo() == 0) return Interval(1.0);
  double c1 = std::cos(a.lo()), c2 = std::cos(a.hi());
  double lo = std::min(lib_down(c1), lib_down(c2));
  double hi = std::max(lib_up(c1), lib_up(c2));
  bool has_max = false, has_min = false;
  double jlo = std::floor(a.lo() / kPiHi) - 1, jhi = std::ceil(a.hi() / kPiHi) + 1;
  for (double j = jlo; j <= jhi; j += 1) {
    Interval c = pi_multiple(j);
    if (c.hi() < a.lo() || c.lo() > a.hi()) continue;
    if (std::fmod(std::fabs(j), 2.0) == 0) has_max = true;
    else has_min = true;
  }
  if (has_max) hi = 1.0;
  if (has_min) lo = -1.0;
  return clamp_unit(lo, hi);
}

Interval sin(const Interval& a) {
  if (!a.is_finite() || a.width() >= 2 * kPiHi || a.mag() > 1e9) return Interval::raw(-1.0, 1.0);
  if (a.is_point() && a.lo() == 0) return Interval(0.0);
  double s1 = std::sin(a.lo()), s2 = std::sin(a.hi());
  double lo = std::min(lib_down(s1), lib_down(s2));
  double hi = std::max(lib_up(s1), lib_up(s2));
  bool has_max = false, has_min = false;
  // Critical points m*pi/2 with m odd.
  double mlo = std::floor(2 * a.lo() / kPiHi) - 2, mhi = std::ceil(2 * a.hi() / kPiHi) + 2;
  for (double m = mlo; m <= mhi; m += 1) {
    if (std::fmod(std::fabs(m), 2.0) != 1.0) continue;
    Interval c = pi_multiple(m);
    c = Interval::raw(c.lo() * 0.5, c.hi() * 0.5);
    if (c.hi() < a.lo() || c.lo() > a.hi()) continue;
    double r = std::fmod(m, 4.0);
    if (r < 0) r += 4.0;
    if (r == 1.0) has_max = true;
    else has_min = true;
  }
  if (has_max) hi = 1.0;
  if (has_min) lo = -1.0;
  return clamp_unit(lo, hi);
}

Interval tan(const Interval& a) {
  double half_pi = 0.5 * kPiHi;  // below the true pi/2
  if (!(a.lo() > -half_pi && a.hi() < half_pi)) throw DomainError("tan outside (-pi/2, pi/2)");
  auto lo_of = [](double x) { return x == 0 ? 0.0 : lib_down(std::tan(x)); };
  auto hi_of = [](double x) { return x == 0 ? 0.0 : lib_up(std::tan(x)); };
  return Interval::raw(lo_of(a.lo()), hi_of(a.hi()));
}

Interval arccos(const Interval& a) {
  if (a.lo() < -1 || a.hi() > 1) throw DomainError("arccos outside [-1, 1]");
  double lo = a.hi() == 1 ? 0.0 : std::max(0.0, lib_down(std::acos(a.hi())));
  double hi = a.lo() == -1  ? rnd::up(kPiHi)
              : a.lo() == 1 ? 0.0
                            : std::min(rnd::up(kPiHi), lib_up(std::acos(a.lo())));
  return Interval::raw(lo, hi);
}

Interval abs(const Interval& a) {
  if (a.lo() >= 0) return a;
  if (a.hi() <= 0) return -a;
  return Interval::raw(0.0, std::max(-a.lo(), a.hi()));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval::raw(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval::raw(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval pow_real(const Interval& a, const Interval& s) {
  if (a.lo() < 0) throw DomainError("pow_real of negative base");
  if (a.lo() == 0) {
    if (!(s.lo() > 0)) throw DomainError("pow_real: base touches 0 with non-positive exponent");
    if (a.hi() == 0) return Interval(0.0);
    Interval top = exp(s * ln(Interval(a.hi())));
    // x^s over x in [0, hi]: sup is at x = hi for whichever s maximizes it.
    return Interval::raw(0.0, top.hi());
  }
  if (a.lo() == 1 && a.hi() == 1) return Interval(1.0);
  return exp(s * ln(a));
}

std::string to_string(const Interval& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lo(), x.hi());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

}  // namespace khv

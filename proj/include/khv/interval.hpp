#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace khv {

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

// Directed rounding done in software. Each primitive computes the
// round-to-nearest result together with its exact error (TwoSum, fma) and
// steps one ulp outward only when the result is inexact, so exact
// operations stay exact.
namespace rnd {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the fma residual may itself be rounded.
constexpr double kTiny = 0x1p-960;

inline double down(double x) { return std::nextafter(x, -kInf); }
inline double up(double x) { return std::nextafter(x, kInf); }

inline double add_down(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isfinite(a) && std::isfinite(b)) return s > 0 ? std::numeric_limits<double>::max() : s;
    return s;
  }
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return e < 0 ? down(s) : s;
}

inline double add_up(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isfinite(a) && std::isfinite(b)) return s < 0 ? -std::numeric_limits<double>::max() : s;
    return s;
  }
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return e > 0 ? up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return p > 0 ? std::numeric_limits<double>::max() : p;
    return p;
  }
  if (std::fabs(p) < kTiny) return down(p);
  double e = std::fma(a, b, -p);
  return e < 0 ? down(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  double p = a * b;
  if (!std::isfinite(p)) {
    if (std::isfinite(a) && std::isfinite(b)) return p < 0 ? -std::numeric_limits<double>::max() : p;
    return p;
  }
  if (std::fabs(p) < kTiny) return up(p);
  double e = std::fma(a, b, -p);
  return e > 0 ? up(p) : p;
}

// Sign of the residual a - q*b tells on which side of the exact quotient q lies.
inline double div_down(double a, double b) {
  if (a == 0) return 0.0;
  double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isfinite(a) && std::isfinite(b)) return q > 0 ? std::numeric_limits<double>::max() : q;
    return q;
  }
  if (std::isinf(b)) return q;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return down(q);
  double r = std::fma(-q, b, a);
  if (r == 0) return q;
  return ((r > 0) == (b > 0)) ? q : down(q);
}

inline double div_up(double a, double b) {
  if (a == 0) return 0.0;
  double q = a / b;
  if (!std::isfinite(q)) {
    if (std::isfinite(a) && std::isfinite(b)) return q < 0 ? -std::numeric_limits<double>::max() : q;
    return q;
  }
  if (std::isinf(b)) return q;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return up(q);
  double r = std::fma(-q, b, a);
  if (r == 0) return q;
  return ((r > 0) == (b > 0)) ? up(q) : q;
}

inline double sqrt_down(double a) {
  if (a <= 0) return 0.0;
  if (std::isinf(a)) return a;
  double s = std::sqrt(a);
  double r = std::fma(-s, s, a);
  return r < 0 ? down(s) : s;
}

inline double sqrt_up(double a) {
  if (a <= 0) return 0.0;
  if (std::isinf(a)) return a;
  double s = std::sqrt(a);
  double r = std::fma(-s, s, a);
  return r > 0 ? up(s) : s;
}

}  // namespace rnd

class Interval {
public:
  constexpr Interval() : lo_(0.0), hi_(0.0) {}
  constexpr Interval(double x) : lo_(x), hi_(x) {}  // NOLINT: implicit on purpose
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi) || lo == rnd::kInf || hi == -rnd::kInf)
      throw DomainError("invalid interval bounds");
  }

  static Interval entire() { return {-rnd::kInf, rnd::kInf}; }
  // Unchecked construction for internal use where lo <= hi is known.
  static Interval raw(double lo, double hi) {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const { return rnd::sub_up(hi_, lo_); }
  double rad() const { return 0.5 * width(); }
  double mag() const { return std::fmax(std::fabs(lo_), std::fabs(hi_)); }
  double mig() const;

  bool is_point() const { return lo_ == hi_; }
  bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const Interval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);
  Interval& operator/=(const Interval& b);

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

private:
  double lo_;
  double hi_;
};

Interval hull(const Interval& a, const Interval& b);
// Throws DomainError when the intersection is empty.
Interval intersect(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a) { return a; }
inline Interval operator-(const Interval& a) { return Interval::raw(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval::raw(rnd::add_down(a.lo(), b.lo()), rnd::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval::raw(rnd::sub_down(a.lo(), b.hi()), rnd::sub_up(a.hi(), b.lo()));
}

Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

inline Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
inline Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
inline Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }
inline Interval& Interval::operator/=(const Interval& b) { return *this = *this / b; }

enum class ArithKind { add, sub, mul, div };
enum class ElemKind { exp, ln, sqrt, sin, cos, arccos, abs };

Interval arith(const Interval& a, const Interval& b, ArithKind kind);
Interval elem(const Interval& a, ElemKind kind);

Interval sqr(const Interval& a);
Interval pown(const Interval& a, int n);
Interval recip(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval expm1(const Interval& a);
Interval ln(const Interval& a);
Interval log1p(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
// Only on (-pi/2, pi/2).
Interval tan(const Interval& a);
Interval arccos(const Interval& a);
Interval abs(const Interval& a);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
// exp(s * ln a); a may touch 0 only when s > 0.
Interval pow_real(const Interval& a, const Interval& s);

// Enclosures of constants.
Interval pi_interval();
Interval euler_gamma();
Interval sqrt2();
// j*pi with a double-double representation of pi (tight for |j| up to ~1e6).
Interval pi_multiple(double j);

std::ostream& operator<<(std::ostream& os, const Interval& x);
std::string to_string(const Interval& x);

}  // namespace khv

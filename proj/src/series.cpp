#include "khv/series.hpp"

#include <array>
#include <string_view>

namespace khv::series {

namespace {

struct Rational {
  std::string_view num;
  long den;
};

constexpr std::array<Rational, kMaxBernoulli> kBernoulli = {{
    {"1", 6},
    {"1", 30},
    {"1", 42},
    {"1", 30},
    {"5", 66},
    {"691", 2730},
    {"7", 6},
    {"3617", 510},
    {"43867", 798},
    {"174611", 330},
    {"854513", 138},
    {"236364091", 2730},
    {"8553103", 6},
    {"23749461029", 870},
    {"8615841276005", 14322},
    {"7709321041217", 510},
    {"2577687858367", 6},
    {"26315271553053477373", 1919190},
    {"2929993913841559", 6},
    {"261082718496449122051", 13530},
}};

// Exact integer -> enclosing interval (the conversion rounds to nearest).
Interval from_decimal(std::string_view s) {
  unsigned __int128 v = 0;
  for (char c : s) v = v * 10 + static_cast<unsigned>(c - '0');
  double d = static_cast<double>(v);
  if (static_cast<unsigned __int128>(d) == v) return Interval(d);
  return Interval::raw(rnd::down(d), rnd::up(d));
}

Interval factorial(int n) {
  Interval f(1.0);
  for (int i = 2; i <= n; ++i) f = f * Interval(static_cast<double>(i));
  return f;
}

std::array<Interval, kMaxBernoulli + 1> make_table(bool lncos) {
  std::array<Interval, kMaxBernoulli + 1> out{};
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    Interval b = bernoulli_abs(k);
    double p2k = std::ldexp(1.0, 2 * k);
    Interval f = factorial(2 * k);
    if (lncos) {
      Interval num = Interval(std::ldexp(1.0, 2 * k - 1)) * (Interval(p2k) - Interval(1.0)) * b;
      out[k] = num / (Interval(static_cast<double>(k)) * f);
    } else {
      out[k] = Interval(p2k) * b / f;
    }
  }
  return out;
}

const std::array<Interval, kMaxBernoulli + 1>& lncos_table() {
  static const auto t = make_table(true);
  return t;
}

const std::array<Interval, kMaxBernoulli + 1>& cot_table() {
  static const auto t = make_table(false);
  return t;
}

constexpr double kZeta2Upper = 1.6450;  // zeta(2k) <= zeta(2) < 1.6450

}  // namespace

Interval bernoulli_abs(int k) {
  if (k < 1 || k > kMaxBernoulli) throw DomainError("Bernoulli index out of range");
  const Rational& r = kBernoulli[k - 1];
  return from_decimal(r.num) / Interval(static_cast<double>(r.den));
}

Interval lncos_coeff(int k) {
  if (k < 1 || k > kMaxBernoulli) throw DomainError("coefficient index out of range");
  return lncos_table()[k];
}

Interval cot_coeff(int k) {
  if (k < 1 || k > kMaxBernoulli) throw DomainError("coefficient index out of range");
  return cot_table()[k];
}

// Remainders use c_k = (2^{2k}-1) zeta(2k) / (k pi^{2k}) <= (zeta(2)/k) (2/pi)^{2k}
// and e_k = 2 zeta(2k) / pi^{2k} <= 2 zeta(2) / pi^{2k}.
Interval lncos_rem(const Interval& t, int m, int K) {
  if (t.lo() < 0 || t.hi() > 1.5) throw DomainError("lncos_rem needs t in [0, 1.5]");
  if (m < 1 || K < m || K > kMaxBernoulli) throw DomainError("lncos_rem term range");
  Interval t2 = sqr(t);
  Interval sum(0.0);
  for (int k = K; k >= m; --k) sum = sum * t2 + lncos_coeff(k);
  Interval two_over_pi = Interval(2.0) / pi_interval();
  Interval q = sqr(two_over_pi * Interval(t.hi()));
  Interval tail = Interval(kZeta2Upper) / Interval(K + 1.0) * pown(two_over_pi, 2 * (K + 1)) *
                  pown(Interval(t.hi()), 2 * (K + 1 - m)) / (Interval(1.0) - q);
  return sum + Interval::raw(0.0, tail.hi());
}

Interval cot_rem(const Interval& t, int m, int K) {
  if (t.lo() < 0 || t.hi() > 3.0) throw DomainError("cot_rem needs t in [0, 3]");
  if (m < 1 || K < m || K > kMaxBernoulli) throw DomainError("cot_rem term range");
  Interval t2 = sqr(t);
  Interval sum(0.0);
  for (int k = K; k >= m; --k) sum = sum * t2 + cot_coeff(k);
  Interval inv_pi = Interval(1.0) / pi_interval();
  Interval r = sqr(inv_pi * Interval(t.hi()));
  Interval tail = Interval(2 * kZeta2Upper) * pown(inv_pi, 2 * (K + 1)) *
                  pown(Interval(t.hi()), 2 * (K + 1 - m)) / (Interval(1.0) - r);
  return sum + Interval::raw(0.0, tail.hi());
}

Interval neg_ln_cos(const Interval& t) {
  Interval s = sin(t * Interval(0.5));
  Interval r = -log1p(Interval(-2.0) * sqr(s));
  return Interval::raw(std::max(0.0, r.lo()), r.hi());
}

namespace {

// Point value of (1 - e^{-y})/y.
Interval phi1_point(double y) {
  if (y == 0) return Interval(1.0);
  if (y < 1e-4) {
    Interval Y(y);
    Interval a = Interval(1.0) - Y / Interval(2.0);
    return Interval::raw(a.lo(), (a + sqr(Y) / Interval(6.0)).hi());
  }
  Interval Y(y);
  return -expm1(-Y) / Y;
}

Interval e2_point(double z) {
  if (z == 0) return Interval(0.5);
  Interval Z(z);
  if (z < 1e-3) {
    Interval a = Interval(0.5) - Z / Interval(6.0);
    return Interval::raw(a.lo(), (a + sqr(Z) / Interval(24.0)).hi());
  }
  return (expm1(-Z) + Z) / sqr(Z);
}

}  // namespace

// Both cofactors are decreasing on [0, inf), so endpoint values suffice.
Interval phi1(const Interval& y) {
  if (y.lo() < 0) throw DomainError("phi1 needs y >= 0");
  if (std::isinf(y.hi())) return Interval::raw(0.0, phi1_point(y.lo()).hi());
  return Interval::raw(phi1_point(y.hi()).lo(), phi1_point(y.lo()).hi());
}

Interval e2(const Interval& z) {
  if (z.lo() < 0) throw DomainError("e2 needs z >= 0");
  if (std::isinf(z.hi())) return Interval::raw(0.0, e2_point(z.lo()).hi());
  return Interval::raw(e2_point(z.hi()).lo(), e2_point(z.lo()).hi());
}

}  // namespace khv::series

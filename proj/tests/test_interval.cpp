#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "khv/interval.hpp"
#include "mp_oracle.hpp"

using namespace khv;
using khv::test::encloses;
using khv::test::mp;

namespace {

double ulp(double x) { return std::nextafter(std::fabs(x), INFINITY) - std::fabs(x); }

}  // namespace

TEST(Arith, Examples) {
  EXPECT_EQ(Interval(1.0) + Interval(2.0), Interval(3.0));
  EXPECT_EQ(Interval(-1.0, 2.0) * Interval(3.0), Interval(-3.0, 6.0));
  Interval third = Interval(1.0) / Interval(3.0);
  EXPECT_TRUE(encloses(third, mp(1) / 3));
  EXPECT_LE(third.width(), 2 * ulp(1.0 / 3.0));
  EXPECT_EQ(arith(Interval(1.0), Interval(2.0), ArithKind::add), Interval(3.0));
}

TEST(Arith, DivisionByZeroThrows) {
  EXPECT_THROW(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
  EXPECT_THROW(Interval(1.0) / Interval(0.0), DomainError);
}

TEST(Interval, InvalidBoundsThrow) {
  EXPECT_THROW(Interval(2.0, 1.0), DomainError);
  EXPECT_THROW(Interval(NAN, 1.0), DomainError);
  EXPECT_THROW(intersect(Interval(0.0, 1.0), Interval(2.0, 3.0)), DomainError);
  EXPECT_EQ(hull(Interval(0.0, 1.0), Interval(2.0, 3.0)), Interval(0.0, 3.0));
  EXPECT_EQ(intersect(Interval(0.0, 2.0), Interval(1.0, 3.0)), Interval(1.0, 2.0));
}

TEST(Elem, Examples) {
  EXPECT_EQ(cos(Interval(0.0)), Interval(1.0));
  EXPECT_EQ(arccos(Interval(1.0)), Interval(0.0));
  Interval l2 = ln(Interval(2.0));
  EXPECT_TRUE(encloses(l2, log(mp(2))));
  EXPECT_LE(l2.width(), 1e-12);
  Interval a = arccos(Interval(0.97));
  EXPECT_TRUE(encloses(a, acos(mp(0.97))));
  EXPECT_NEAR(a.mid(), 0.2455, 1e-4);
}

TEST(Elem, DomainErrors) {
  EXPECT_THROW(ln(Interval(0.0, 1.0)), DomainError);
  EXPECT_THROW(sqrt(Interval(-1.0, 1.0)), DomainError);
  EXPECT_THROW(arccos(Interval(0.5, 1.5)), DomainError);
  EXPECT_THROW(pow_real(Interval(-1.0, 1.0), Interval(2.0)), DomainError);
  EXPECT_THROW(pow_real(Interval(0.0, 1.0), Interval(-1.0)), DomainError);
}

TEST(PowReal, Examples) {
  Interval r = pow_real(Interval(4.0), Interval(0.5));
  EXPECT_TRUE(r.contains(2.0));
  EXPECT_LE(r.width(), 1e-12);
  EXPECT_EQ(pow_real(Interval(0.0, 1.0), Interval(2.0)), Interval(0.0, 1.0));
  // 0.5^sqrt2 = 0.37521...; the printed 0.61257 is 0.5^{1/sqrt2}.
  Interval s = pow_real(Interval(0.5), sqrt2());
  EXPECT_TRUE(encloses(s, pow(mp(0.5), sqrt(mp(2)))));
  EXPECT_NEAR(s.mid(), 0.3752142272, 1e-9);
  EXPECT_TRUE(encloses(pow_real(Interval(0.5), Interval(1.0) / sqrt2()), pow(mp(0.5), 1 / sqrt(mp(2)))));
}

TEST(Elem, SinCosCriticalPoints) {
  Interval c = cos(Interval(-0.1, 0.1));
  EXPECT_EQ(c.hi(), 1.0);
  Interval s = sin(Interval(1.5, 1.7));
  EXPECT_EQ(s.hi(), 1.0);
  Interval w = cos(Interval(3.0, 3.3));
  EXPECT_EQ(w.lo(), -1.0);
  EXPECT_EQ(sin(Interval(0.0, 7.0)), Interval(-1.0, 1.0));
}

TEST(Elem, LargeArgumentsStayEnclosed) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1.0, 1e4);
  for (int i = 0; i < 2000; ++i) {
    double x = u(rng);
    EXPECT_TRUE(encloses(sin(Interval(x)), sin(mp(x)))) << x;
    EXPECT_TRUE(encloses(cos(Interval(x)), cos(mp(x)))) << x;
  }
  // Nearest doubles to multiples of pi/2.
  for (int k = 1; k < 6000; k += 7) {
    double x = static_cast<double>(k * (khv::test::mp_pi() / 2));
    EXPECT_TRUE(encloses(cos(Interval(x)), cos(mp(x)))) << k;
    EXPECT_TRUE(encloses(sin(Interval(x)), sin(mp(x)))) << k;
  }
}

struct UnaryCase {
  const char* name;
  std::function<Interval(const Interval&)> f;
  std::function<mp(const mp&)> ref;
  double lo, hi;
};

std::vector<UnaryCase> unary_cases() {
  return {
      {"exp", [](const Interval& x) { return exp(x); }, [](const mp& x) { return exp(x); }, -30, 30},
      {"expm1", [](const Interval& x) { return expm1(x); }, [](const mp& x) { return expm1(x); }, -5, 5},
      {"ln", [](const Interval& x) { return ln(x); }, [](const mp& x) { return log(x); }, 1e-6, 1e6},
      {"log1p", [](const Interval& x) { return log1p(x); }, [](const mp& x) { return log1p(x); }, -0.9, 10},
      {"sqrt", [](const Interval& x) { return sqrt(x); }, [](const mp& x) { return sqrt(x); }, 0, 1e6},
      {"sin", [](const Interval& x) { return sin(x); }, [](const mp& x) { return sin(x); }, -100, 100},
      {"cos", [](const Interval& x) { return cos(x); }, [](const mp& x) { return cos(x); }, -100, 100},
      {"tan", [](const Interval& x) { return tan(x); }, [](const mp& x) { return tan(x); }, -1.5, 1.5},
      {"arccos", [](const Interval& x) { return arccos(x); }, [](const mp& x) { return acos(x); }, -1, 1},
      {"abs", [](const Interval& x) { return abs(x); }, [](const mp& x) { return abs(x); }, -10, 10},
      {"recip", [](const Interval& x) { return recip(x); }, [](const mp& x) { return 1 / x; }, 0.01, 100},
      {"pown5", [](const Interval& x) { return pown(x, 5); }, [](const mp& x) { return pow(x, 5); }, -3, 3},
  };
}

TEST(Property, PointContainment) {
  // 10^5 points spread over the unary functions, the four operations and pow_real.
  auto cases = unary_cases();
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int bad = 0;
  const int total = 100000;
  for (int i = 0; i < total; ++i) {
    int k = i % static_cast<int>(cases.size() + 2);
    if (k < static_cast<int>(cases.size())) {
      const auto& c = cases[k];
      double x = c.lo + (c.hi - c.lo) * u01(rng);
      if (!encloses(c.f(Interval(x)), c.ref(mp(x)))) ++bad;
    } else if (k == static_cast<int>(cases.size())) {
      double a = 200 * u01(rng) - 100, b = 200 * u01(rng) - 100;
      if (b == 0) b = 1;
      mp A(a), B(b);
      bad += !encloses(Interval(a) + Interval(b), A + B);
      bad += !encloses(Interval(a) - Interval(b), A - B);
      bad += !encloses(Interval(a) * Interval(b), A * B);
      bad += !encloses(Interval(a) / Interval(b), A / B);
    } else {
      double a = 10 * u01(rng) + 1e-3, s = 6 * u01(rng) - 3;
      if (!encloses(pow_real(Interval(a), Interval(s)), pow(mp(a), mp(s)))) ++bad;
    }
  }
  EXPECT_EQ(bad, 0);
}

TEST(Property, InclusionIsotonicity) {
  auto cases = unary_cases();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const auto& c : cases) {
    for (int i = 0; i < 500; ++i) {
      double a = c.lo + (c.hi - c.lo) * u01(rng), b = c.lo + (c.hi - c.lo) * u01(rng);
      Interval outer(std::min(a, b), std::max(a, b));
      double x = outer.lo() + outer.width() * u01(rng), y = outer.lo() + outer.width() * u01(rng);
      Interval inner(std::min(x, y), std::max(x, y));
      if (!(inner.subset_of(outer))) continue;
      EXPECT_TRUE(c.f(inner).subset_of(c.f(outer))) << c.name << " " << to_string(inner);
    }
  }
  for (int i = 0; i < 2000; ++i) {
    double a = 4 * u01(rng) - 2, b = a + 2 * u01(rng), c = 4 * u01(rng) + 0.5, d = c + u01(rng);
    Interval A(a, b), B(c, d);
    Interval a2(a + 0.25 * (b - a), b - 0.25 * (b - a)), b2(c, c + 0.5 * (d - c));
    for (auto kind : {ArithKind::add, ArithKind::sub, ArithKind::mul, ArithKind::div})
      EXPECT_TRUE(arith(a2, b2, kind).subset_of(arith(A, B, kind)));
    Interval base(c, d), sub(c, c + 0.5 * (d - c));
    EXPECT_TRUE(pow_real(sub, a2).subset_of(pow_real(base, A)));
  }
}

TEST(Property, WidthControl) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 5000; ++i) {
    double a = u(rng), b = u(rng);
    if (b == 0) continue;
    for (auto kind : {ArithKind::add, ArithKind::sub, ArithKind::mul, ArithKind::div}) {
      Interval r = arith(Interval(a), Interval(b), kind);
      EXPECT_LE(r.width(), 8 * ulp(r.mid()));
    }
  }
  std::uniform_real_distribution<double> v(0.05, 3.0);
  for (int i = 0; i < 5000; ++i) {
    double x = v(rng);
    for (auto kind : {ElemKind::exp, ElemKind::ln, ElemKind::sqrt, ElemKind::sin, ElemKind::cos}) {
      Interval r = elem(Interval(x), kind);
      EXPECT_LE(r.width(), 1e-12 * std::max(std::fabs(r.mid()), 1e-300)) << static_cast<int>(kind) << " " << x;
    }
    Interval r = elem(Interval(x / 3.1), ElemKind::arccos);
    EXPECT_LE(r.width(), 1e-12 * r.mid());
  }
}

TEST(Interval, PiAndConstants) {
  EXPECT_TRUE(encloses(pi_interval(), khv::test::mp_pi()));
  EXPECT_TRUE(encloses(sqrt2(), sqrt(mp(2))));
  EXPECT_TRUE(encloses(euler_gamma(), khv::test::mp_euler()));
  EXPECT_TRUE(encloses(pi_multiple(12345.0), 12345 * khv::test::mp_pi()));
}

TEST(Interval, MinMaxAbs) {
  EXPECT_EQ(abs(Interval(-2.0, 1.0)), Interval(0.0, 2.0));
  EXPECT_EQ(min(Interval(0.0, 3.0), Interval(1.0, 2.0)), Interval(0.0, 2.0));
  EXPECT_EQ(max(Interval(0.0, 3.0), Interval(1.0, 2.0)), Interval(1.0, 3.0));
}

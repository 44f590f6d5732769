#include <gtest/gtest.h>

#include <cmath>

#include "khv/distfn.hpp"
#include "mp_oracle.hpp"

using namespace khv;
using khv::test::encloses;
using khv::test::mp;

namespace {

MeasureParams at(double p) { return MeasureParams(Interval(p)); }

// Direct long double summation of the F_* series, largest k first, with the
// remainder after K terms bounded by (pi - 2a)/pi ((K-1) pi + a)^{-p}.
Interval f_star_ref(double x, double p) {
  const long double pi = 3.14159265358979323846264338327950288L;
  long double a = std::acos(static_cast<long double>(x)), P = p;
  const int K = 1000000;
  long double s = 0.0L;
  for (int k = K - 1; k >= 0; --k) s += std::pow(k * pi + a, -P) - std::pow((k + 1) * pi - a, -P);
  s /= P;
  long double tail = (pi - 2 * a) / pi * std::pow((K - 1) * pi + a, -P);
  long double slack = 1e-15L * s;
  return Interval(static_cast<double>(s - slack), static_cast<double>(s + tail + slack));
}

}  // namespace

TEST(FStar, Examples) {
  Interval z = f_star(Interval(1e-9), at(2.0));
  EXPECT_GE(z.lo(), 0.0);
  EXPECT_LE(z.hi(), 1e-6);
  Interval f = f_star(Interval(0.97), at(2.0), 100);
  Interval g = g_star(Interval(0.97), at(2.0));
  EXPECT_GT(f.lo(), g.hi());
  EXPECT_LT(f_star(Interval(0.3), at(2.5)).hi(), f_star(Interval(0.6), at(2.5)).lo());
  EXPECT_LT(f_star(Interval(0.6), at(2.5)).hi(), f_star(Interval(0.9), at(2.5)).lo());
}

TEST(FStar, AgreesWithDirectSummation) {
  for (double p : {2.0, 2.5, 3.0}) {
    for (double x : {0.05, 0.5, 0.9, 0.97}) {
      Interval f = f_star(Interval(x), at(p));
      EXPECT_TRUE(f.overlaps(f_star_ref(x, p))) << x << " " << p << " " << to_string(f);
    }
  }
}

TEST(GStar, Examples) {
  EXPECT_TRUE(g_star(exp(Interval(-0.5)), at(2.0)).contains(0.5));
  // 1/(4 ln(1/0.97)) = 8.20769877...
  Interval g = g_star(Interval(0.97), at(2.0));
  EXPECT_TRUE(encloses(g, 1 / (4 * log(1 / mp(0.97)))));
  EXPECT_NEAR(g.mid(), 8.2076987763, 1e-9);
  EXPECT_LE(g_star(Interval(1e-9), at(2.0)).hi(), 0.013);
  for (double p : {2.0, 2.3, 3.0})
    for (double x : {0.01, 0.4, 0.99})
      EXPECT_TRUE(encloses(g_star(Interval(x), at(p)), pow(-2 * log(mp(x)), -mp(p) / 2) / p));
}

TEST(Derivatives, Examples) {
  DistDerivatives d = derivatives(exp(Interval(-0.5)), at(2.0));
  EXPECT_TRUE(encloses(d.g, exp(mp(0.5))));
  for (double p : {2.0, 2.5, 3.0}) {
    for (int i = 1; i < 50; ++i) {
      DistDerivatives e = derivatives(Interval(i / 50.0), at(p));
      EXPECT_GE(e.f.lo(), 0.0);
      EXPECT_GE(e.g.lo(), 0.0);
      DistDerivatives k0 = derivatives(Interval(i / 50.0), at(p), 200, true);
      EXPECT_LE(k0.f.lo(), e.f.hi());
    }
  }
  DistDerivatives c = derivatives(cos(Interval(1.0)), at(2.0));
  EXPECT_GT((c.f / c.g).lo(), 1.0);
}

TEST(Derivatives, MatchFiniteDifferences) {
  const double h = 1e-4;
  for (double p : {2.0, 2.5, 3.0}) {
    for (int i = 1; i <= 20; ++i) {
      double x = 0.04 * i + 0.05;
      DistDerivatives d = derivatives(Interval(x), at(p));
      double ff = (f_star(Interval(x + h), at(p)).mid() - f_star(Interval(x - h), at(p)).mid()) / (2 * h);
      double fg = (g_star(Interval(x + h), at(p)).mid() - g_star(Interval(x - h), at(p)).mid()) / (2 * h);
      EXPECT_NEAR(ff / d.f.mid(), 1.0, 1e-2) << x << " " << p;
      EXPECT_NEAR(fg / d.g.mid(), 1.0, 1e-2) << x << " " << p;
    }
  }
}

TEST(BruteForce, Examples) {
  for (double y : {0.02, 0.3, 0.7, 0.98}) {
    Interval g = brute_force_dist(y, at(2.5), DistKind::gauss);
    EXPECT_TRUE(g.overlaps(g_star(Interval(y), at(2.5))));
  }
  EXPECT_TRUE(brute_force_dist(0.5, at(2.0), DistKind::cos).overlaps(f_star(Interval(0.5), at(2.0))));
  Interval c = brute_force_dist(0.97, at(2.0), DistKind::cos);
  EXPECT_GT(c.lo(), 8.2);
  EXPECT_LT(c.hi(), 8.3);
  EXPECT_THROW(brute_force_dist(0.995, at(2.0), DistKind::cos), DomainError);
  EXPECT_THROW(brute_force_dist(0.005, at(2.0), DistKind::gauss), DomainError);
}

TEST(Property, FStarMatchesOracleOnGrid) {
  for (double p : {2.0, 2.25, 2.5, 2.75, 3.0}) {
    for (int i = 0; i < 50; ++i) {
      double x = 0.02 + 0.96 * i / 49;
      Interval f = f_star(Interval(x), at(p));
      Interval b = brute_force_dist(x, at(p), DistKind::cos);
      EXPECT_TRUE(f.overlaps(b)) << x << " " << p;
    }
  }
}

TEST(Property, NondecreasingAlongGrid) {
  for (double p : {2.0, 2.5, 3.0}) {
    double pf = -1, pg = -1;
    for (int i = 1; i < 200; ++i) {
      double x = i / 200.0;
      double f = f_star(Interval(x), at(p)).mid(), g = g_star(Interval(x), at(p)).mid();
      EXPECT_GE(f, pf);
      EXPECT_GE(g, pg);
      pf = f;
      pg = g;
    }
  }
}

TEST(Property, IntervalPEnclosesPoints) {
  Interval P(2.25, 2.5);
  Interval f = f_star(Interval(0.5), MeasureParams(P));
  Interval g = g_star(Interval(0.5), MeasureParams(P));
  for (double p : {2.25, 2.3, 2.4, 2.5}) {
    EXPECT_TRUE(f_star(Interval(0.5), at(p)).subset_of(f));
    EXPECT_TRUE(g_star(Interval(0.5), at(p)).subset_of(g));
  }
}

TEST(DistFn, DomainErrors) {
  EXPECT_THROW(MeasureParams(Interval(3.5)), DomainError);
  EXPECT_THROW(MeasureParams(Interval(1.5, 2.5)), DomainError);
  EXPECT_THROW(f_star(Interval(0.0, 0.5), at(2.0)), DomainError);
  EXPECT_THROW(f_star(Interval(0.5, 1.0), at(2.0)), DomainError);
  EXPECT_THROW(g_star(Interval(1.0), at(2.0)), DomainError);
  EXPECT_THROW(f_star(Interval(0.5), at(2.0), 0), DomainError);
}

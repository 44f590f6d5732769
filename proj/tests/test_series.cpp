#include <gtest/gtest.h>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <random>

#include "khv/series.hpp"
#include "mp_oracle.hpp"

using namespace khv;
using khv::test::encloses;
using khv::test::mp;

namespace {

mp bern_abs(int k) { return abs(boost::math::bernoulli_b2n<mp>(k)); }
mp fact(int n) { return boost::math::factorial<mp>(static_cast<unsigned>(n)); }

mp c_ref(int k) { return pow(mp(2), 2 * k - 1) * (pow(mp(2), 2 * k) - 1) * bern_abs(k) / (k * fact(2 * k)); }
mp e_ref(int k) { return pow(mp(2), 2 * k) * bern_abs(k) / fact(2 * k); }

mp lncos_rem_ref(const mp& t, int m) {
  mp s = -log(cos(t));
  for (int k = 1; k < m; ++k) s -= c_ref(k) * pow(t, 2 * k);
  return s / pow(t, 2 * m);
}

mp cot_rem_ref(const mp& t, int m) {
  mp s = 1 - t * cos(t) / sin(t);
  for (int k = 1; k < m; ++k) s -= e_ref(k) * pow(t, 2 * k);
  return s / pow(t, 2 * m);
}

}  // namespace

TEST(Series, Coefficients) {
  EXPECT_TRUE(encloses(series::lncos_coeff(1), mp(1) / 2));
  EXPECT_TRUE(encloses(series::lncos_coeff(2), mp(1) / 12));
  EXPECT_TRUE(encloses(series::lncos_coeff(3), mp(1) / 45));
  EXPECT_TRUE(encloses(series::cot_coeff(1), mp(1) / 3));
  EXPECT_TRUE(encloses(series::cot_coeff(2), mp(1) / 45));
  for (int k = 1; k <= series::kMaxBernoulli; ++k) {
    EXPECT_TRUE(encloses(series::bernoulli_abs(k), bern_abs(k))) << k;
    EXPECT_TRUE(encloses(series::lncos_coeff(k), c_ref(k))) << k;
    EXPECT_TRUE(encloses(series::cot_coeff(k), e_ref(k))) << k;
  }
}

TEST(Series, RemaindersEncloseReference) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 1.5), w(0.05, 3.0);
  for (int i = 0; i < 400; ++i) {
    double t = u(rng), s = w(rng);
    for (int m : {1, 2, 3, 4}) {
      EXPECT_TRUE(encloses(series::lncos_rem(Interval(t), m), lncos_rem_ref(mp(t), m))) << t << " " << m;
      EXPECT_TRUE(encloses(series::cot_rem(Interval(s), m), cot_rem_ref(mp(s), m))) << s << " " << m;
    }
  }
}

TEST(Series, RemainderAtZeroIsLeadingCoefficient) {
  for (int m : {1, 2, 3, 4}) {
    EXPECT_TRUE(encloses(series::lncos_rem(Interval(0.0), m), c_ref(m)));
    EXPECT_TRUE(encloses(series::cot_rem(Interval(0.0), m), e_ref(m)));
  }
  // Over a cell touching 0 the enclosure covers every point.
  Interval r = series::lncos_rem(Interval(0.0, 0.5), 2);
  for (double t : {1e-3, 0.1, 0.3, 0.5}) EXPECT_TRUE(encloses(r, lncos_rem_ref(mp(t), 2)));
}

TEST(Series, DomainLimits) {
  EXPECT_THROW(series::lncos_rem(Interval(1.0, 1.6), 2), DomainError);
  EXPECT_THROW(series::cot_rem(Interval(2.0, 3.1), 2), DomainError);
  EXPECT_THROW(series::lncos_coeff(0), DomainError);
}

TEST(Series, Cofactors) {
  EXPECT_TRUE(series::phi1(Interval(0.0)).contains(1.0));
  EXPECT_TRUE(series::e2(Interval(0.0)).contains(0.5));
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(1e-6, 30.0);
  for (int i = 0; i < 300; ++i) {
    double y = u(rng);
    mp Y(y);
    EXPECT_TRUE(encloses(series::phi1(Interval(y)), (1 - exp(-Y)) / Y)) << y;
    EXPECT_TRUE(encloses(series::e2(Interval(y)), (exp(-Y) - 1 + Y) / (Y * Y))) << y;
  }
}

TEST(Series, NegLnCos) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.57);
  for (int i = 0; i < 500; ++i) {
    double t = u(rng);
    EXPECT_TRUE(encloses(series::neg_ln_cos(Interval(t)), -log(cos(mp(t))))) << t;
  }
  EXPECT_EQ(series::neg_ln_cos(Interval(0.0)).lo(), 0.0);
}

TEST(Series, LiftKeepsValueAndForgetsDerivatives) {
  using J = Jet<Interval, 1>;
  J j = series::lift<J>(Interval(1.0, 2.0));
  EXPECT_EQ(j.v, Interval(1.0, 2.0));
  EXPECT_FALSE(j.d[0].is_finite());
}

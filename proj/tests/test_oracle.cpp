#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "khv/oracle.hpp"
#include "mp_oracle.hpp"

using namespace khv;
using khv::test::mp;

namespace {

// All 2^n sign patterns, summed in multiprecision.
mp mp_moment(const std::vector<double>& a, double p) {
  const int n = static_cast<int>(a.size());
  mp s = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    mp t = 0;
    for (int k = 0; k < n; ++k) t += (m >> k & 1) ? mp(a[k]) : -mp(a[k]);
    s += pow(abs(t), mp(p));
  }
  return s / mp(std::uint64_t{1} << n);
}

}  // namespace

TEST(ExactMoment, Examples) {
  EXPECT_DOUBLE_EQ(exact_moment({1.0}, 2.5), 1.0);
  double h = std::sqrt(0.5);
  EXPECT_NEAR(exact_moment({h, h}, 3.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(exact_moment({0.6, 0.8}, 2.0), 1.0, 1e-15);
  std::mt19937_64 rng(5);
  for (int n : {3, 7, 12}) EXPECT_NEAR(exact_moment(random_unit_vector(n, rng), 2.0), 1.0, 1e-14);
}

TEST(ExactMoment, Errors) {
  EXPECT_THROW(exact_moment(std::vector<double>(27, 1.0), 2.5), CapacityError);
  EXPECT_THROW(exact_moment({}, 2.5), DomainError);
  EXPECT_THROW(exact_moment({1.0}, 0.0), DomainError);
  EXPECT_THROW(khintchine_check({0.0, 0.0}, 2.5), DomainError);
  EXPECT_THROW(khintchine_check({1.0}, 3.5), DomainError);
}

TEST(ExactMoment, MatchesMultiprecisionEnumeration) {
  std::mt19937_64 rng(6);
  for (int n : {1, 2, 5, 9, 14}) {
    for (double p : {2.0, 2.3, 2.77, 3.0}) {
      std::vector<double> a = random_unit_vector(n, rng);
      double e = exact_moment(a, p);
      double ref = static_cast<double>(mp_moment(a, p));
      EXPECT_NEAR(e, ref, 1e-14 * ref) << n << " " << p;
    }
  }
}

TEST(Khintchine, Examples) {
  double h = std::sqrt(0.5);
  KhintchineResult r = khintchine_check({h, h}, 3.0);
  EXPECT_NEAR(r.ratio, std::pow(std::sqrt(2.0), 1.0 / 3), 1e-14);
  EXPECT_NEAR(r.ratio, 1.12246, 1e-5);
  EXPECT_TRUE(r.ok);
  EXPECT_LT(r.ratio, r.bound);
  KhintchineResult e1 = khintchine_check({1.0, 0.0, 0.0}, 2.5);
  EXPECT_DOUBLE_EQ(e1.ratio, 1.0);
  EXPECT_TRUE(e1.lower_ok);
  // Scaling leaves the ratio unchanged.
  EXPECT_NEAR(khintchine_check({3.0, 4.0}, 2.5).ratio, khintchine_check({0.6, 0.8}, 2.5).ratio, 1e-15);
}

TEST(Steckin, TargetAndApproach) {
  auto p2 = steckin_convergence(2.0, {1, 10, 100});
  for (const auto& pt : p2) {
    EXPECT_NEAR(pt.moment, 1.0, 1e-13);
    EXPECT_NEAR(pt.target, 1.0, 1e-15);
  }
  auto pts = steckin_convergence(2.5, {16, 64, 256, 1024});
  double target = static_cast<double>(pow(mp(2), mp(1.25)) * boost::math::tgamma(mp(1.75)) /
                                      sqrt(khv::test::mp_pi()));
  double prev = 0.0;
  for (const auto& pt : pts) {
    EXPECT_NEAR(pt.target, target, 1e-14);
    EXPECT_LT(pt.moment, pt.target);
    EXPECT_GT(pt.moment, prev);
    prev = pt.moment;
  }
  EXPECT_LT(pts.back().target - pts.back().moment, 1e-3);
  // Binomial weights agree with direct enumeration of n equal coefficients.
  std::vector<double> eq(10, 1.0 / std::sqrt(10.0));
  EXPECT_NEAR(steckin_convergence(2.5, {10}).front().moment, exact_moment(eq, 2.5), 1e-13);
  EXPECT_THROW(steckin_convergence(2.5, {0}), DomainError);
  EXPECT_THROW(steckin_convergence(2.5, {20000}), CapacityError);
}

TEST(MonteCarlo, SingleCoefficientAndDeterminism) {
  MonteCarloResult one = monte_carlo_moment({1.0}, 2.5, 1000, 7);
  EXPECT_DOUBLE_EQ(one.estimate, 1.0);
  EXPECT_DOUBLE_EQ(one.stderr_, 0.0);
  std::vector<double> a{0.5, 0.5, 0.5, 0.5};
  MonteCarloResult x = monte_carlo_moment(a, 2.5, 20000, 11), y = monte_carlo_moment(a, 2.5, 20000, 11);
  EXPECT_EQ(x.estimate, y.estimate);
  EXPECT_EQ(x.stderr_, y.stderr_);
  EXPECT_LT(std::abs(x.estimate - exact_moment(a, 2.5)), 5 * x.stderr_);
  EXPECT_THROW(monte_carlo_moment(a, 2.5, 10, 1), DomainError);
}

TEST(OracleSuite, Proved) {
  CheckResult r = check_oracle(20251017);
  EXPECT_EQ(r.status, Status::proved) << r.name;
  EXPECT_TRUE(statuses_consistent(r));
  EXPECT_EQ(r.children.size(), 4u);
}

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

#include "khv/verifier.hpp"

using namespace khv;

namespace {

void expect_all_leaves_proved(const CheckResult& r) {
  if (r.children.empty()) {
    EXPECT_EQ(r.status, Status::proved) << r.name << " " << r.note;
    return;
  }
  for (const auto& c : r.children) expect_all_leaves_proved(c);
}

const CheckResult* find(const CheckResult& r, const std::string& name) {
  if (r.name == name) return &r;
  for (const auto& c : r.children)
    if (const CheckResult* f = find(c, name)) return f;
  return nullptr;
}

// int_0^inf (exp(-s t^2/2) - |cos t|^s) t^{-p-1} dt by double Gauss-Kronrod
// over half periods of cos, with the averaged tail past T.
double conclusion_ref(double p, double s) {
  auto f = [p, s](double t) {
    if (t < 1e-3) {
      // exp(-s t^2/2) - cos^s t = s t^4/12 + O(t^6)
      return s * std::pow(t, 3.0 - p) / 12;
    }
    return (std::exp(-s * t * t / 2) - std::pow(std::abs(std::cos(t)), s)) * std::pow(t, -p - 1);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double sum = GK::integrate(f, 0.0, M_PI / 2, 15, 1e-15);
  const int halves = 4000;
  for (int k = 0; k < halves; ++k) sum += GK::integrate(f, M_PI / 2 + k * M_PI, M_PI / 2 + (k + 1) * M_PI, 15, 1e-15);
  double T = M_PI / 2 + halves * M_PI;
  // mean of |cos t|^s over a period is Gamma((s+1)/2)/(sqrt(pi) Gamma(s/2+1))
  double mean = std::tgamma((s + 1) / 2) / (std::sqrt(M_PI) * std::tgamma(s / 2 + 1));
  return sum - mean * std::pow(T, -p) / p;
}

}  // namespace

TEST(Cond1, AllLeavesProved) {
  CheckResult r = check_cond1();
  EXPECT_EQ(r.status, Status::proved);
  expect_all_leaves_proved(r);
  EXPECT_TRUE(statuses_consistent(r));
}

TEST(Cond1, WrongSigmaFails) {
  CheckResult r = check_cond1_sign_at_sigma(0.5);
  EXPECT_EQ(r.status, Status::failed);
  EXPECT_TRUE(statuses_consistent(r));
  // Near p = 2, F_* < G_* at 0.5, so the direct comparison is certified false.
  const CheckResult* d = find(r, "p in [2, 2.0625]");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->status, Status::failed);
}

TEST(Cond1, DerivativeRatioSpotValues) {
  for (double p : {2.0, 2.5, 3.0}) {
    for (double t : {0.2, 0.5, 1.0, 1.4}) {
      double L = -2 * std::log(std::cos(t));
      double e = (p + 1) / 2;
      double ref = (std::pow(L / (t * t), e) + std::pow(L / ((M_PI - t) * (M_PI - t)), e)) * std::sqrt(L) / std::tan(t);
      Interval v = derivative_ratio_lower(Interval(t), Interval(p));
      EXPECT_NEAR(v.mid(), ref, 1e-12 * ref) << t << " " << p;
      EXPECT_LE(v.width(), 1e-12 * ref);
    }
  }
  EXPECT_NEAR(derivative_ratio_lower(Interval(0.5), Interval(2.5)).mid(), 1.0127982199746, 1e-12);
}

TEST(Cond2, H2Pieces) {
  CheckResult r = check_cond2_h2();
  ASSERT_EQ(r.status, Status::proved);
  EXPECT_TRUE(statuses_consistent(r));
  const CheckResult* net = find(r, "A + B - C - D > 0");
  ASSERT_NE(net, nullptr);
  EXPECT_GT(net->margin.lo(), 0.0);
  EXPECT_NEAR(net->margin.mid(), 0.0030, 2e-4);
  const CheckResult* direct = find(r, "H(2) directly");
  ASSERT_NE(direct, nullptr);
  EXPECT_GT(direct->margin.lo(), net->margin.hi());
  EXPECT_NE(find(r, "g''' > 0"), nullptr);
}

TEST(Cond2, TailComparison) {
  EXPECT_EQ(check_hprime_tail_comparison(0.043369, 16).status, Status::proved);
  EXPECT_EQ(check_hprime_tail_comparison(0.01, 16).status, Status::failed);
}

TEST(Cond2, Proved) {
  CheckResult r = check_cond2();
  EXPECT_EQ(r.status, Status::proved);
  EXPECT_TRUE(statuses_consistent(r));
}

TEST(Np, CrossingLocalized) {
  CheckResult r = check_np();
  ASSERT_EQ(r.status, Status::proved);
  EXPECT_TRUE(statuses_consistent(r));
  for (const auto& pc : r.children) {
    const CheckResult& h1 = pc.children.front();
    ASSERT_TRUE(h1.value.has_value()) << pc.name;
    EXPECT_GT(h1.value->lo(), 1.0 / 15.0) << pc.name;
    EXPECT_LT(h1.value->hi(), 0.97) << pc.name;
  }
}

TEST(Conclusion, IntegralMatchesIndependentQuadrature) {
  for (double p : {2.25, 2.5, 2.9}) {
    Interval v = conclusion_integral(Interval(p), Interval(2.0));
    double ref = conclusion_ref(p, 2.0);
    EXPECT_LE(v.lo(), ref + 1e-9) << p;
    EXPECT_GE(v.hi(), ref - 1e-9) << p;
    EXPECT_GT(v.lo(), 0.0);
  }
  EXPECT_NEAR(conclusion_integral(Interval(2.5), Interval(2.0)).mid(), 0.0700494, 1e-6);
}

TEST(Conclusion, IncreasingInS) {
  CheckResult r = check_conclusion_direct({2.5}, {1.5, 2.0, 10.0});
  ASSERT_EQ(r.status, Status::proved);
  Interval a = conclusion_integral(Interval(2.5), sqrt2());
  Interval b = conclusion_integral(Interval(2.5), Interval(10.0));
  EXPECT_LT(a.hi(), b.lo());
}

TEST(Conclusion, LimitConvergence) {
  CheckResult r = check_fp_convergence(2.5, {2, 8, 32});
  EXPECT_EQ(r.status, Status::proved);
  Interval L = fp_limit(2.5);
  EXPECT_GT(L.lo(), 0.8);
  double prev = INFINITY;
  for (double s : {2.0, 8.0, 32.0, 128.0}) {
    double d = fp_deviation(2.5, s).mag();
    EXPECT_LT(d, prev) << s;
    prev = d;
  }
}

TEST(Conclusion, SuiteProved) {
  CheckResult r = check_conclusion();
  EXPECT_EQ(r.status, Status::proved);
  EXPECT_TRUE(statuses_consistent(r));
}

TEST(Config, Validation) {
  VerifierConfig c;
  c.terms = 4;
  EXPECT_THROW(validate(c), DomainError);
  c = VerifierConfig{};
  c.depth = 5;
  EXPECT_THROW(validate(c), DomainError);
  auto boxes = p_boxes(16);
  ASSERT_EQ(boxes.size(), 16u);
  EXPECT_EQ(boxes.front().lo(), 2.0);
  EXPECT_EQ(boxes.back().hi(), 3.0);
  for (std::size_t i = 1; i < boxes.size(); ++i) EXPECT_EQ(boxes[i - 1].hi(), boxes[i].lo());
}

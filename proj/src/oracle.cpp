#include "khv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "khv/specfun.hpp"

namespace khv {

namespace {

// Neumaier summation in long double; the order of addition is fixed.
class Accumulator {
public:
  void add(long double x) {
    long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

double norm2(const std::vector<double>& a) {
  long double s = 0.0L;
  for (double x : a) s += static_cast<long double>(x) * x;
  return static_cast<double>(std::sqrt(s));
}

std::string fmt(const char* f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

CheckResult slack_leaf(std::string name, double slack, std::uint64_t evals, std::string note = {}) {
  CheckResult r = leaf(std::move(name), Interval(slack), true, evals);
  r.note = std::move(note);
  return r;
}

double rel_err(double x, double ref) { return std::fabs(x - ref) / std::max(std::fabs(ref), 1e-300); }

}  // namespace

double exact_moment(const std::vector<double>& a, double p) {
  if (a.empty()) throw DomainError("exact_moment needs n >= 1");
  if (a.size() > static_cast<size_t>(kMaxEnumeration))
    throw CapacityError("exact_moment enumerates at most 26 coefficients");
  if (!(p > 0)) throw DomainError("exact_moment needs p > 0");
  int m = static_cast<int>(a.size()) - 1;
  std::vector<int> eps(a.size(), 1);
  long double s = std::accumulate(a.begin(), a.end(), 0.0L);
  Accumulator acc;
  acc.add(std::pow(std::fabs(s), static_cast<long double>(p)));
  std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < count; ++i) {
    int j = std::countr_zero(i) + 1;
    s -= 2.0L * eps[j] * a[j];
    eps[j] = -eps[j];
    acc.add(std::pow(std::fabs(s), static_cast<long double>(p)));
  }
  return static_cast<double>(acc.value() / static_cast<long double>(count));
}

KhintchineResult khintchine_check(const std::vector<double>& a, double p) {
  if (!(p >= 2 && p <= 3)) throw DomainError("khintchine_check needs p in [2, 3]");
  double nrm = norm2(a);
  if (!(nrm > 0)) throw DomainError("khintchine_check needs a nonzero vector");
  KhintchineResult r;
  r.ratio = std::pow(exact_moment(a, p), 1.0 / p) / nrm;
  r.bound = b_constant(Interval(p)).B.mid();
  r.ok = r.ratio <= r.bound + 1e-12;
  r.lower_ok = r.ratio >= 1.0 - 1e-12;
  return r;
}

std::vector<SteckinPoint> steckin_convergence(double p, const std::vector<int>& n_list) {
  if (!(p > 0)) throw DomainError("steckin_convergence needs p > 0");
  double target = std::pow(2.0, p / 2) * std::tgamma((p + 1) / 2) / std::sqrt(M_PI);
  std::vector<SteckinPoint> out;
  for (int n : n_list) {
    if (n < 1) throw DomainError("steckin_convergence needs n >= 1");
    if (n > 10000) throw CapacityError("steckin_convergence binomial mode needs n <= 10^4");
    long double N = n;
    long double lfn = std::lgamma(N + 1) - N * std::log(2.0L);
    long double rn = std::sqrt(N);
    Accumulator acc;
    for (int k = 0; k <= n; ++k) {
      long double w = std::exp(lfn - std::lgamma(k + 1.0L) - std::lgamma(N - k + 1));
      long double x = std::fabs(2.0L * k - N) / rn;
      acc.add(w * std::pow(x, static_cast<long double>(p)));
    }
    out.push_back({n, static_cast<double>(acc.value()), target});
  }
  return out;
}

MonteCarloResult monte_carlo_moment(const std::vector<double>& a, double p, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (a.empty()) throw DomainError("monte_carlo_moment needs n >= 1");
  if (trials < 1000) throw DomainError("monte_carlo_moment needs at least 1000 trials");
  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t t = 1; t <= trials; ++t) {
    double s = 0.0;
    std::uint64_t bits = 0;
    for (size_t k = 0; k < a.size(); ++k) {
      if (k % 64 == 0) bits = rng();
      s += (bits >> (k % 64)) & 1 ? a[k] : -a[k];
    }
    double x = std::pow(std::fabs(s), p);
    double d = x - mean;
    mean += d / static_cast<double>(t);
    m2 += d * (x - mean);
  }
  double var = m2 / static_cast<double>(trials - 1);
  return {mean, std::sqrt(var / static_cast<double>(trials))};
}

std::vector<double> random_unit_vector(int n, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("random_unit_vector needs n >= 1");
  std::normal_distribution<double> z;
  for (;;) {
    std::vector<double> v(n);
    for (double& x : v) x = z(rng);
    double nrm = norm2(v);
    if (!(nrm > 0)) continue;
    for (double& x : v) x /= nrm;
    return v;
  }
}

CheckResult check_khintchine_sweep(std::uint64_t seed, int vectors, int max_n) {
  std::vector<CheckResult> ch;
  for (double p : {2.2, 2.5, 2.8}) {
    std::mt19937_64 rng(seed);
    double upper = std::numeric_limits<double>::infinity();
    double lower = upper, worst = 0.0;
    int bad = 0;
    for (int i = 0; i < vectors; ++i) {
      int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
      KhintchineResult k = khintchine_check(random_unit_vector(n, rng), p);
      upper = std::min(upper, k.bound + 1e-12 - k.ratio);
      lower = std::min(lower, k.ratio - (1.0 - 1e-12));
      worst = std::max(worst, k.ratio);
      if (!k.ok || !k.lower_ok) ++bad;
    }
    char name[96], note[128];
    std::snprintf(name, sizeof name, "p = %g: 1 <= ratio <= B_p for %d vectors", p, vectors);
    std::snprintf(note, sizeof note, "largest ratio %.9f, B_p %.9f, %d violations", worst,
                  b_constant(Interval(p)).B.mid(), bad);
    ch.push_back(slack_leaf(name, std::min(upper, lower), static_cast<std::uint64_t>(vectors), note));
  }
  CheckResult r = composite("khintchine sweep", std::move(ch));
  r.note = "seed " + std::to_string(seed);
  return r;
}

CheckResult check_steckin(double p, int n) {
  SteckinPoint s = steckin_convergence(p, {n}).front();
  double dev = std::fabs(s.moment / s.target - 1.0);
  char name[96], note[96];
  std::snprintf(name, sizeof name, "p = %g, n = %d: moment within 2%% of the Gaussian limit", p, n);
  std::snprintf(note, sizeof note, "moment %.9f, target %.9f", s.moment, s.target);
  return slack_leaf(name, 0.02 - dev, static_cast<std::uint64_t>(n + 1), note);
}

CheckResult check_moment_properties(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  const double p_ref = 2.5;
  double hom = 0.0, perm = 0.0, mono = 0.0, binom = 0.0;
  std::uint64_t ev = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<double> a = random_unit_vector(n, rng);
    double m = exact_moment(a, p_ref);
    std::vector<double> b = a;
    for (double& x : b) x *= 1.7;
    hom = std::max(hom, rel_err(exact_moment(b, p_ref), std::pow(1.7, p_ref) * m));
    // Every single sign flip, the reversal and a shuffled order.
    for (int k = 0; k < n; ++k) {
      b = a;
      b[k] = -b[k];
      perm = std::max(perm, rel_err(exact_moment(b, p_ref), m));
    }
    b.assign(a.rbegin(), a.rend());
    perm = std::max(perm, rel_err(exact_moment(b, p_ref), m));
    b = a;
    std::shuffle(b.begin(), b.end(), rng);
    perm = std::max(perm, rel_err(exact_moment(b, p_ref), m));
    ev += 3 + static_cast<std::uint64_t>(n);
  }
  // Power means increase with p.
  const double grid[] = {1.0, 1.5, 2.0, 2.2, 2.5, 2.8, 3.0, 4.0};
  for (int i = 0; i < 50; ++i) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    std::vector<double> a = random_unit_vector(n, rng);
    double prev = 0.0;
    for (double p : grid) {
      double v = std::pow(exact_moment(a, p), 1.0 / p);
      mono = std::max(mono, (prev - v) / prev);
      prev = v;
      ++ev;
    }
  }
  for (int n = 1; n <= 20; ++n) {
    std::vector<double> a(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (double p : {2.2, 2.5, 3.0}) {
      binom = std::max(binom, rel_err(steckin_convergence(p, {n}).front().moment, exact_moment(a, p)));
      ++ev;
    }
  }
  std::vector<CheckResult> ch;
  ch.push_back(slack_leaf("homogeneity: E|sum 1.7 a eps|^p = 1.7^p E|sum a eps|^p", 1e-12 - hom, max_n,
                          fmt("max relative error %.3g", hom)));
  ch.push_back(slack_leaf("invariance under sign flips and permutations", 1e-12 - perm, ev,
                          fmt("max relative error %.3g", perm)));
  ch.push_back(slack_leaf("p -> moment^{1/p} nondecreasing", 1e-12 - std::max(mono, 0.0), 400,
                          fmt("max relative decrease %.3g", mono)));
  ch.push_back(slack_leaf("binomial weights agree with enumeration, n <= 20", 1e-12 - binom, 60,
                          fmt("max relative error %.3g", binom)));
  CheckResult r = composite("exact moment properties", std::move(ch));
  r.note = "n <= " + std::to_string(max_n) + ", seed " + std::to_string(seed);
  return r;
}

CheckResult check_monte_carlo(std::uint64_t seed) {
  std::vector<double> a(8, 1.0 / std::sqrt(8.0));
  double exact = exact_moment(a, 2.5);
  MonteCarloResult mc = monte_carlo_moment(a, 2.5, 100000, seed);
  char note[128];
  std::snprintf(note, sizeof note, "estimate %.6f +- %.6f, exact %.6f", mc.estimate, mc.stderr_, exact);
  return slack_leaf("n = 8, p = 2.5: Monte Carlo within 4 stderr of enumeration",
                    4.0 * mc.stderr_ - std::fabs(mc.estimate - exact), 100000, note);
}

CheckResult check_oracle(std::uint64_t seed) {
  return composite("oracle", {check_khintchine_sweep(seed), check_steckin(), check_moment_properties(seed),
                              check_monte_carlo(seed)});
}

}  // namespace khv

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "khv/check_result.hpp"

// Floating-point brute force for the Khintchine inequality itself: exact
// Rademacher moments by enumeration, the Steckin limit, Monte Carlo.
namespace khv {

inline constexpr int kMaxEnumeration = 26;

// E|sum a_k eps_k|^p over all 2^{n-1} sign patterns (eps_1 fixed by symmetry),
// visited in Gray code order. Throws CapacityError for n > 26.
double exact_moment(const std::vector<double>& a, double p);

struct KhintchineResult {
  double ratio = 0.0;  // (E|sum a_k eps_k|^p)^{1/p} / |a|_2
  double bound = 0.0;  // midpoint of the B_p enclosure
  bool ok = false;     // ratio <= bound + 1e-12
  bool lower_ok = false;  // ratio >= 1 - 1e-12
};

KhintchineResult khintchine_check(const std::vector<double>& a, double p);

struct SteckinPoint {
  int n = 0;
  double moment = 0.0;
  double target = 0.0;  // 2^{p/2} Gamma((p+1)/2)/sqrt(pi)
};

// E|n^{-1/2} sum_{k<=n} eps_k|^p from binomial weights, n <= 10^4.
std::vector<SteckinPoint> steckin_convergence(double p, const std::vector<int>& n_list);

struct MonteCarloResult {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

MonteCarloResult monte_carlo_moment(const std::vector<double>& a, double p, std::uint64_t trials,
                                    std::uint64_t seed);

// Uniform on the unit sphere: normalized standard normals.
std::vector<double> random_unit_vector(int n, std::mt19937_64& rng);

// The oracle suite as checks; margins are floating-point slacks.
CheckResult check_khintchine_sweep(std::uint64_t seed, int vectors = 200, int max_n = 16);
CheckResult check_steckin(double p = 3.0, int n = 64);
CheckResult check_moment_properties(std::uint64_t seed, int max_n = 10);
CheckResult check_monte_carlo(std::uint64_t seed);
CheckResult check_oracle(std::uint64_t seed);

}  // namespace khv

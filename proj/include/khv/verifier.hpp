#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "khv/check_result.hpp"
#include "khv/interval.hpp"
#include "khv/quad.hpp"

namespace khv {

struct VerifierConfig {
  int p_boxes = 16;
  int depth = 40;
  double target_width = 1e-6;
  int terms = 200;
  std::uint64_t budget = 2'000'000;
  double tail_cutoff = 50.0;

  QuadConfig quad() const;
};

void validate(const VerifierConfig& cfg);

// n boxes of equal width covering [lo, hi].
std::vector<Interval> p_boxes(int n, double lo = 2.0, double hi = 3.0);

// Runs fn on each p-box and combines the results.
CheckResult over_p_boxes(const std::string& name, int n,
                         const std::function<CheckResult(const Interval&)>& fn);

// Distribution functions cross at most once: F_* > G_* at sigma.
CheckResult check_cond1_sign_at_sigma(double sigma = 0.97, const VerifierConfig& cfg = {});

// F_* < G_* on (0, rho].
CheckResult check_cond1_small_x(double rho = 1.0 / 15.0, const VerifierConfig& cfg = {});

// F_* - G_* increasing on (rho, 1): the derivative ratio is at least 1.
CheckResult check_cond1_monotone(double rho = 1.0 / 15.0, const VerifierConfig& cfg = {});
CheckResult check_reduction_to_p2(const VerifierConfig& cfg = {});
CheckResult check_case1_polynomials(const VerifierConfig& cfg = {});
CheckResult check_case2_convexity(const VerifierConfig& cfg = {});

// ((L/t^2)^{(p+1)/2} + (L/(pi-t)^2)^{(p+1)/2}) sqrt(L) cot t with L = -2 ln cos t.
Interval derivative_ratio_lower(const Interval& t, const Interval& p);

CheckResult check_cond1(const VerifierConfig& cfg = {});

// d/dp of the second hypothesis integral is nonnegative on [2, 3].
CheckResult check_cond2_hprime(const VerifierConfig& cfg = {});
// c (2/pi)^p >= 0.00705/(p-1) over n p-boxes.
CheckResult check_hprime_tail_comparison(double c, int n);

// The second hypothesis integral at p = 2, as four pieces.
CheckResult check_cond2_h2(const VerifierConfig& cfg = {});

// H(p) > 0 directly by quadrature on each p-box.
CheckResult check_h_direct(const VerifierConfig& cfg = {});

CheckResult check_cond2(const VerifierConfig& cfg = {});

// Single-crossing comparison of two distribution functions plus the moment
// condition at s0. Cells of [x_min, Y] are classified by the sign of F - G;
// when a derivative enclosure of F - G is supplied, monotone cells are bounded
// from their endpoints and a crossing inside an increasing cell is allowed.
struct NpProblem {
  FnEnclosure F;
  FnEnclosure G;
  FnEnclosure dFG;  // optional enclosure of (F - G)'
  double Y = 0.999;
  double x_min = 1e-6;
  double s0 = 1.4142135623730951;
  std::function<CheckResult()> integral_check;
  int grid = 64;
  int max_refine = 30;
  double tol = kNonStrictTol;
};

CheckResult np_generic(const NpProblem& problem);

// The two distribution functions of |cos t| and exp(-t^2/2) at fixed p.
NpProblem cos_gauss_np_problem(const Interval& p, const VerifierConfig& cfg = {});
CheckResult check_np(const VerifierConfig& cfg = {});

// int_0^inf (exp(-s t^2/2) - |cos t|^s) t^{-p-1} dt.
Interval conclusion_integral(const Interval& p, const Interval& s, const VerifierConfig& cfg = {},
                             std::uint64_t* evaluations = nullptr);
CheckResult check_conclusion_direct(const std::vector<double>& p_grid, const std::vector<double>& s_grid,
                                    const VerifierConfig& cfg = {});

// I(s) - I(inf) for the c_p-free integral of the limit argument.
Interval fp_deviation(double p, double s, const VerifierConfig& cfg = {});
Interval fp_limit(double p, const VerifierConfig& cfg = {});
CheckResult check_fp_convergence(double p, const std::vector<double>& s_list, const VerifierConfig& cfg = {});

CheckResult check_conclusion(const VerifierConfig& cfg = {});

}  // namespace khv

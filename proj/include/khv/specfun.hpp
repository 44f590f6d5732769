#pragma once

#include <array>

#include "khv/interval.hpp"

namespace khv {

struct SeriesPolicy {
  int max_terms = 200;
  double tail_safety = 1.0;  // multiplies every remainder bound; must be >= 1
};

// Partial sum sum_{k<=K} c_k t^{2k} of the -ln cos series: a lower bound for -ln cos t.
Interval neg_ln_cos_lower(const Interval& t, int K);

// exp(-t^2/2), exp(-t^2/2 - t^4/12), exp(-t^2/2 - t^4/12 - t^6/45):
// decreasing chain of upper bounds for cos t.
std::array<Interval, 3> cos_upper_bounds(const Interval& t);

// Ei(x) for x in [-30, -1e-6].
Interval ei_neg(const Interval& x, const SeriesPolicy& policy = {});

// si(x) = Si(x) - pi/2 and ci(x), x in (0, 50].
Interval si(const Interval& x, const SeriesPolicy& policy = {});
Interval ci(const Interval& x, const SeriesPolicy& policy = {});

// sum_{k>=1} k^{-q} for q in [2, 4.5]: partial sum to K plus integral tail.
Interval zeta_sum(const Interval& q, int K = 10000);

// Gamma on [1, 10] from the shifted Stirling series.
Interval gamma(const Interval& x);

struct KhintchineConstants {
  Interval A;
  Interval B;
};

// B_p = 2^{1/2} (Gamma((p+1)/2)/sqrt(pi))^{1/p} and A_p = 1, for p in [2, 3].
KhintchineConstants b_constant(const Interval& p);

}  // namespace khv

#pragma once

#include <optional>

#include "khv/interval.hpp"

namespace khv {

struct MeasureParams {
  Interval p;

  explicit MeasureParams(const Interval& p_);
};

struct DistPoint {
  double x = 0.0;
  Interval value;
  std::optional<Interval> derivative;
};

// mu_p{t > 0 : |cos t| < x} = (1/p) sum_k [(k pi + a)^{-p} - ((k+1) pi - a)^{-p}], a = arccos x.
Interval f_star(const Interval& x, const MeasureParams& mp, int K = 200);

// mu_p{t > 0 : exp(-t^2/2) < x} = (1/p) (-2 ln x)^{-p/2}.
Interval g_star(const Interval& x, const MeasureParams& mp);

struct DistDerivatives {
  Interval f;  // F'_*
  Interval g;  // G'_*
};

// With k0_only, the F'_* component is only its k = 0 term (a lower bound).
DistDerivatives derivatives(const Interval& x, const MeasureParams& mp, int K = 200,
                            bool k0_only = false);

enum class DistKind { cos, gauss };

// Independent oracle for the two distribution functions at a point y.
Interval brute_force_dist(double y, const MeasureParams& mp, DistKind which);

}  // namespace khv

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "khv/interval.hpp"
#include "khv/jet.hpp"

namespace khv {

using FnEnclosure = std::function<Interval(const Interval&)>;

struct QuadConfig {
  int max_depth = 40;
  double target_width = 1e-6;
  double tail_cutoff = 50.0;
  std::uint64_t max_evaluations = 2'000'000;
};

enum class QuadStatus { converged, wide };

struct QuadResult {
  Interval value;
  QuadStatus status = QuadStatus::converged;
  std::uint64_t evaluations = 0;
};

// On (0, upto] the integrand factors as t^alpha * cofactor(t) with alpha > -1
// and a bounded cofactor; cells there are integrated as
// cofactor([u,v]) * (v^{alpha+1} - u^{alpha+1}) / (alpha+1).
struct NearZero {
  double upto = 0.0;
  Interval alpha;
  FnEnclosure cofactor;
};

// Enclosures of (f, f', f'') over an interval.
using Taylor2 = std::function<std::array<Interval, 3>(const Interval&)>;

struct Integrand {
  FnEnclosure f;
  // Optional. When present each cell also gets the expansion at its midpoint m,
  // f(m) h + f'(m) ((v-m)^2 - (u-m)^2)/2 + f''([u,v]) ((v-m)^3 + (m-u)^3)/6,
  // intersected with the crude bound.
  Taylor2 taylor2;
  std::optional<NearZero> near_zero;
};

using Jet2 = Jet<Jet<Interval, 1>, 1>;

// Builds f and taylor2 from a generic callable usable with Interval and Jet2.
template <class F>
Integrand make_integrand(F fn) {
  Integrand g;
  g.f = [fn](const Interval& t) { return fn(t); };
  g.taylor2 = [fn](const Interval& t) {
    Jet2 x(Jet<Interval, 1>::variable(t, 0));
    x.d[0] = Jet<Interval, 1>(1.0);
    Jet2 y = fn(x);
    return std::array<Interval, 3>{y.v.v, y.v.d[0], y.d[0].d[0]};
  };
  return g;
}

void validate(const QuadConfig& cfg);

// Adaptive bisection: a cell is accepted once its enclosure width is at most
// target_width * (v-u)/(b-a), so the summed width meets target_width unless
// max_depth or the evaluation budget intervenes (status wide, still valid).
QuadResult integrate(const FnEnclosure& f, double a, double b, const QuadConfig& cfg);
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg);

enum class TailKind { gauss, cos_power, one };

// Enclosure of int_T^inf h(t) t^{-p-1} dt for h = exp(-s t^2/2), |cos t|^s, 1.
Interval tail_bound_mu_p(TailKind kind, const Interval& s, const Interval& p, double T);

// int_T^inf t^{k-p-1} dt = T^{k-p}/(p-k), needs p > k.
Interval power_tail(double k, const Interval& p, double T);

}  // namespace khv

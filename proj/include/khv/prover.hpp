#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "khv/check_result.hpp"
#include "khv/interval.hpp"
#include "khv/jet.hpp"

// Branch and bound over boxes: proves f >= 0 (or > 0) on a 1-D or 2-D box.
// Each cell is bounded by the natural interval extension, a monotonicity
// reduction when the gradient has a fixed sign, and the mean-value form;
// the best lower bound wins. Cells are processed depth first in a fixed
// order, so results are deterministic.
namespace khv {

struct ProveConfig {
  bool strict = true;
  std::uint64_t budget = 2'000'000;
  int max_depth = 64;
};

namespace detail {

template <int D, class F, class T>
T apply_fn(const F& f, const std::array<T, D>& x) {
  return std::apply([&](const auto&... a) { return f(a...); }, x);
}

template <int D>
using Box = std::array<Interval, D>;

template <int D, class F>
class Prover {
public:
  Prover(const F& f, const Box<D>& domain, const ProveConfig& cfg) : f_(f), domain_(domain), cfg_(cfg) {}

  CheckResult run(std::string name) {
    Stopwatch sw;
    double tol = cfg_.strict ? 0.0 : kNonStrictTol;
    double min_lb = std::numeric_limits<double>::infinity();
    double min_ub = std::numeric_limits<double>::infinity();
    std::vector<std::pair<Box<D>, int>> stack;
    stack.push_back({domain_, 0});
    bool stopped = false;
    while (!stack.empty()) {
      auto [box, depth] = stack.back();
      stack.pop_back();
      if (stopped) {
        min_lb = std::min(min_lb, natural_lo(box));
        continue;
      }
      double ub = upper_at_mid(box);
      min_ub = std::min(min_ub, ub);
      if (ub < -tol) {
        // Certified counterexample: the margin's upper end is negative.
        min_lb = std::min(min_lb, natural_lo(box));
        stopped = true;
        continue;
      }
      double lb = lower_bound(box);
      if (lb > -tol && (cfg_.strict ? lb > 0 : true)) {
        min_lb = std::min(min_lb, lb);
        continue;
      }
      int dim = split_dim(box);
      double m = box[dim].mid();
      bool splittable = depth < cfg_.max_depth && m > box[dim].lo() && m < box[dim].hi() &&
                        evaluations_ < cfg_.budget;
      if (!splittable) {
        min_lb = std::min(min_lb, lb);
        continue;
      }
      Box<D> left = box, right = box;
      left[dim] = Interval(box[dim].lo(), m);
      right[dim] = Interval(m, box[dim].hi());
      stack.push_back({right, depth + 1});
      stack.push_back({left, depth + 1});
    }
    if (!(min_lb <= min_ub)) min_ub = min_lb;
    CheckResult r = leaf(std::move(name), Interval::raw(min_lb, min_ub), cfg_.strict, evaluations_);
    r.elapsed_ms = sw.ms();
    return r;
  }

private:
  double natural_lo(const Box<D>& box) {
    ++evaluations_;
    try {
      return apply_fn<D>(f_, box).lo();
    } catch (const DomainError&) {
      return -std::numeric_limits<double>::infinity();
    }
  }

  double upper_at_mid(const Box<D>& box) {
    Box<D> c;
    for (int i = 0; i < D; ++i) c[i] = Interval(box[i].mid());
    ++evaluations_;
    try {
      return apply_fn<D>(f_, c).hi();
    } catch (const DomainError&) {
      return std::numeric_limits<double>::infinity();
    }
  }

  double lower_bound(const Box<D>& box) {
    double best = natural_lo(box);
    if (best > 0) return best;
    using J = Jet<Interval, D>;
    std::array<J, D> vars;
    for (int i = 0; i < D; ++i) vars[i] = J::variable(box[i], i);
    ++evaluations_;
    J jet;
    try {
      jet = apply_fn<D>(f_, vars);
    } catch (const DomainError&) {
      return best;
    }
    best = std::max(best, jet.v.lo());
    // Collapse every coordinate along which f is monotone to its minimizing end.
    Box<D> reduced = box;
    bool collapsed = false;
    for (int i = 0; i < D; ++i) {
      if (jet.d[i].lo() >= 0) {
        reduced[i] = Interval(box[i].lo());
        collapsed = true;
      } else if (jet.d[i].hi() <= 0) {
        reduced[i] = Interval(box[i].hi());
        collapsed = true;
      }
    }
    if (collapsed) {
      best = std::max(best, natural_lo(reduced));
      if (best > 0) return best;
    }
    best = std::max(best, mean_value_lo(reduced, collapsed ? nullptr : &jet));
    return best;
  }

  double mean_value_lo(const Box<D>& box, const Jet<Interval, D>* known) {
    using J = Jet<Interval, D>;
    J jet;
    if (known) {
      jet = *known;
    } else {
      std::array<J, D> vars;
      for (int i = 0; i < D; ++i) vars[i] = J::variable(box[i], i);
      ++evaluations_;
      try {
        jet = apply_fn<D>(f_, vars);
      } catch (const DomainError&) {
        return -std::numeric_limits<double>::infinity();
      }
    }
    Box<D> c;
    for (int i = 0; i < D; ++i) c[i] = Interval(box[i].mid());
    ++evaluations_;
    try {
      Interval mv = apply_fn<D>(f_, c);
      for (int i = 0; i < D; ++i) mv += jet.d[i] * (box[i] - c[i]);
      return mv.lo();
    } catch (const DomainError&) {
      return -std::numeric_limits<double>::infinity();
    }
  }

  int split_dim(const Box<D>& box) const {
    int best = 0;
    double w = -1;
    for (int i = 0; i < D; ++i) {
      double dw = domain_[i].width();
      double rel = dw > 0 ? box[i].width() / dw : 0.0;
      if (rel > w) {
        w = rel;
        best = i;
      }
    }
    return best;
  }

  const F& f_;
  Box<D> domain_;
  ProveConfig cfg_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace detail

// f is a generic callable taking D arguments of type Interval or Jet<Interval, D>.
template <class F>
CheckResult prove_nonneg(std::string name, const F& f, const Interval& x, const ProveConfig& cfg = {}) {
  return detail::Prover<1, F>(f, {x}, cfg).run(std::move(name));
}

template <class F>
CheckResult prove_nonneg(std::string name, const F& f, const Interval& x, const Interval& y,
                         const ProveConfig& cfg = {}) {
  return detail::Prover<2, F>(f, {x, y}, cfg).run(std::move(name));
}

// Bisection with the plain interval extension only, for enclosures that have
// no derivative form (series, distribution functions).
inline CheckResult prove_nonneg_natural(std::string name, const std::function<Interval(const Interval&)>& f,
                                        const Interval& x, const ProveConfig& cfg = {}) {
  Stopwatch sw;
  double tol = cfg.strict ? 0.0 : kNonStrictTol;
  double min_lb = std::numeric_limits<double>::infinity();
  double min_ub = std::numeric_limits<double>::infinity();
  std::uint64_t evals = 0;
  auto eval = [&](const Interval& c) {
    ++evals;
    try {
      return f(c);
    } catch (const DomainError&) {
      return Interval::entire();
    }
  };
  std::vector<std::pair<Interval, int>> stack{{x, 0}};
  bool stopped = false;
  while (!stack.empty()) {
    auto [c, depth] = stack.back();
    stack.pop_back();
    Interval v = eval(c);
    if (stopped) {
      min_lb = std::min(min_lb, v.lo());
      continue;
    }
    double ub = eval(Interval(c.mid())).hi();
    min_ub = std::min(min_ub, ub);
    if (ub < -tol) {
      min_lb = std::min(min_lb, v.lo());
      stopped = true;
      continue;
    }
    bool ok = cfg.strict ? v.lo() > 0 : v.lo() > -tol;
    double m = c.mid();
    if (ok || depth >= cfg.max_depth || !(m > c.lo() && m < c.hi()) || evals >= cfg.budget) {
      min_lb = std::min(min_lb, v.lo());
      continue;
    }
    stack.push_back({Interval(m, c.hi()), depth + 1});
    stack.push_back({Interval(c.lo(), m), depth + 1});
  }
  if (!(min_lb <= min_ub)) min_ub = min_lb;
  CheckResult r = leaf(std::move(name), Interval::raw(min_lb, min_ub), cfg.strict, evals);
  r.elapsed_ms = sw.ms();
  return r;
}

inline ProveConfig non_strict() {
  ProveConfig c;
  c.strict = false;
  return c;
}

}  // namespace khv

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "khv/check_result.hpp"
#include "khv/interval.hpp"
#include "khv/prover.hpp"
#include "khv/verifier.hpp"

namespace khv::detail {

inline Interval pi() { return pi_interval(); }

// Leaf certifying lhs >= rhs.
inline CheckResult ge(std::string name, const Interval& lhs, const Interval& rhs, bool strict = true) {
  return leaf(std::move(name), lhs - rhs, strict);
}

// Leaf whose headline quantity differs from its margin.
inline CheckResult with_value(CheckResult r, const Interval& value, std::string note = {}) {
  r.value = value;
  if (!note.empty()) r.note = std::move(note);
  return r;
}

inline ProveConfig prove_config(const VerifierConfig& cfg, bool strict = true) {
  ProveConfig pc;
  pc.strict = strict;
  pc.budget = cfg.budget;
  return pc;
}

// int_a^b (e^{-st^2/2} - |cos t|^s) t^{-p-1} dt for 0 <= a < b, and the same
// with the extra weight -ln t; max_depth > 0 caps the quadrature depth.
Interval mu_range(const Interval& p, const Interval& s, double a, double b, const VerifierConfig& cfg,
                  std::uint64_t* evals = nullptr, int max_depth = -1);
Interval mu_range_dp(const Interval& p, const Interval& s, double a, double b, const VerifierConfig& cfg,
                     std::uint64_t* evals = nullptr, int max_depth = -1);
// Enclosures of the parts beyond T.
Interval mu_tail(const Interval& p, const Interval& s, double T);
Interval mu_tail_dp(const Interval& p, const Interval& s, double T);

// x^s for a positive base, usable with a jet-valued exponent.
template <class T, class S>
T powv(const T& x, const S& s) {
  return exp(s * ln(x));
}

}  // namespace khv::detail

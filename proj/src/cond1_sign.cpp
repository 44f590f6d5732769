#include <cmath>
#include <cstdio>

#include "khv/distfn.hpp"
#include "khv/prover.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

using detail::ge;
using detail::pi;

QuadConfig VerifierConfig::quad() const {
  QuadConfig q;
  q.max_depth = depth;
  q.target_width = target_width;
  q.tail_cutoff = tail_cutoff;
  q.max_evaluations = budget;
  return q;
}

void validate(const VerifierConfig& cfg) {
  if (cfg.p_boxes < 1) throw DomainError("p_boxes must be >= 1");
  if (cfg.depth < 10) throw DomainError("depth must be >= 10");
  if (!(cfg.target_width > 0)) throw DomainError("target_width must be > 0");
  if (cfg.terms < 8) throw DomainError("terms must be >= 8");
  validate(cfg.quad());
}

std::vector<Interval> p_boxes(int n, double lo, double hi) {
  if (n < 1) throw DomainError("p_boxes needs n >= 1");
  std::vector<Interval> out;
  out.reserve(n);
  double prev = lo;
  for (int i = 1; i <= n; ++i) {
    double next = i == n ? hi : lo + (hi - lo) * i / n;
    out.emplace_back(prev, next);
    prev = next;
  }
  return out;
}

CheckResult over_p_boxes(const std::string& name, int n,
                         const std::function<CheckResult(const Interval&)>& fn) {
  std::vector<CheckResult> children;
  for (const Interval& box : p_boxes(n)) {
    CheckResult c = fn(box);
    char buf[64];
    std::snprintf(buf, sizeof buf, "p in [%.6g, %.6g]", box.lo(), box.hi());
    c.name = buf;
    children.push_back(std::move(c));
  }
  return composite(name, std::move(children));
}

namespace {

// p (F_* - G_*)(sigma) >= a^{-p} - L^{-p/2} - pi^2 a/(pi - a)^3, a = arccos sigma, L = 2 ln(1/sigma).
template <class T>
T sign_rhs(const Interval& a, const Interval& L, const T& p) {
  Interval penalty = sqr(pi()) * a / pown(pi() - a, 3);
  return exp(-p * ln(a)) - exp(-(p * 0.5) * ln(L)) - penalty;
}

}  // namespace

CheckResult check_cond1_sign_at_sigma(double sigma, const VerifierConfig& cfg) {
  if (!(sigma > 0 && sigma < 1)) throw DomainError("sigma must lie in (0, 1)");
  Interval s(sigma);
  Interval a = arccos(s);
  Interval L = Interval(2.0) * ln(Interval(1.0) / s);
  std::vector<CheckResult> children;

  children.push_back(detail::with_value(leaf("rhs at p=2", sign_rhs(a, L, Interval(2.0))),
                                        sign_rhs(a, L, Interval(2.0))));

  // The bound grows with p when both bases of the powers exceed 1 and the
  // arccos base is the larger one.
  Interval inv_a = Interval(1.0) / a, inv_l = Interval(1.0) / sqrt(L);
  children.push_back(composite("rhs increasing in p",
                               {ge("1/arccos(sigma) > 1/sqrt(2 ln(1/sigma))", inv_a, inv_l),
                                ge("1/sqrt(2 ln(1/sigma)) >= 1", inv_l, Interval(1.0), false)}));

  auto rhs = [a, L](const auto& p) { return sign_rhs(a, L, p); };
  children.push_back(prove_nonneg("rhs over [2,3]", rhs, Interval(2.0, 3.0), detail::prove_config(cfg)));

  // Redundant: the distribution functions themselves, p-box by p-box.
  int K = cfg.terms;
  children.push_back(over_p_boxes("direct F_* - G_* > 0", cfg.p_boxes, [&](const Interval& box) {
    auto diff = [&](const Interval& p) {
      MeasureParams mp(p);
      return f_star(s, mp, K) - g_star(s, mp);
    };
    return prove_nonneg_natural("", diff, box, detail::prove_config(cfg));
  }));

  CheckResult r = composite("cond1.sign-at-sigma", std::move(children));
  char buf[64];
  std::snprintf(buf, sizeof buf, "sigma = %.6g", sigma);
  r.note = buf;
  return r;
}

}  // namespace khv

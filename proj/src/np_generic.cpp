#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "khv/distfn.hpp"
#include "khv/verifier.hpp"
#include "verifier_util.hpp"

namespace khv {

namespace {

enum class CellKind { neg, pos, zero, crossing, unresolved };

struct Cell {
  double u, v;
  CellKind kind;
  double slack;  // how far the cell is from violating its class
};

class Classifier {
public:
  explicit Classifier(const NpProblem& pr) : pr_(pr) {}

  Cell classify(double u, double v) {
    ++evals_;
    Interval X(u, v);
    Interval D = pr_.F(X) - pr_.G(X);
    if (pr_.dFG) {
      Interval d = pr_.dFG(X);
      if (d.lo() >= 0 || d.hi() <= 0) {
        // Monotone on the cell: the endpoint values bound it.
        Interval range = hull(at(u), at(v));
        if (range.overlaps(D)) D = intersect(D, range);
        Cell c = from_range(u, v, D);
        // Increasing with both signs possible: at most one crossing inside.
        if (c.kind == CellKind::unresolved && d.lo() > 0) c = {u, v, CellKind::crossing, 0.0};
        return c;
      }
    }
    return from_range(u, v, D);
  }

  std::uint64_t evaluations() const { return evals_; }

private:
  double tol() const { return pr_.tol; }

  Interval at(double x) {
    Interval X(x);
    return pr_.F(X) - pr_.G(X);
  }

  Cell from_range(double u, double v, const Interval& D) const {
    bool le = D.hi() <= tol(), ge = D.lo() >= -tol();
    if (le && ge) return {u, v, CellKind::zero, std::min(-D.hi(), D.lo())};
    if (le) return {u, v, CellKind::neg, -D.hi()};
    if (ge) return {u, v, CellKind::pos, D.lo()};
    return {u, v, CellKind::unresolved, std::min(-D.hi(), D.lo())};
  }

  const NpProblem& pr_;
  std::uint64_t evals_ = 0;
};

}  // namespace

CheckResult np_generic(const NpProblem& pr) {
  if (!pr.F || !pr.G) throw DomainError("np_generic needs F and G");
  if (pr.grid < 16) throw DomainError("np_generic needs grid >= 16");
  if (!(pr.x_min > 0 && pr.x_min < pr.Y)) throw DomainError("np_generic needs 0 < x_min < Y");
  if (!(pr.s0 > 0)) throw DomainError("np_generic needs s0 > 0");
  Stopwatch sw;
  Classifier cls(pr);

  // Uniform grid, then bisection of unresolved cells.
  std::vector<Cell> cells;
  for (int i = 0; i < pr.grid; ++i) {
    double u = i == 0 ? pr.x_min : pr.x_min + (pr.Y - pr.x_min) * i / pr.grid;
    double v = i + 1 == pr.grid ? pr.Y : pr.x_min + (pr.Y - pr.x_min) * (i + 1) / pr.grid;
    cells.push_back(cls.classify(u, v));
  }
  for (int level = 0; level < pr.max_refine; ++level) {
    bool any = false;
    std::vector<Cell> next;
    for (const Cell& c : cells) {
      double m = 0.5 * (c.u + c.v);
      if (c.kind != CellKind::unresolved || !(m > c.u && m < c.v)) {
        next.push_back(c);
        continue;
      }
      any = true;
      next.push_back(cls.classify(c.u, m));
      next.push_back(cls.classify(m, c.v));
    }
    cells = std::move(next);
    if (!any) break;
  }

  // Expected order: negative cells, then crossing cells, then positive cells;
  // zero cells fit anywhere. A certified negative cell after a certified
  // positive one means two sign changes.
  double slack = std::numeric_limits<double>::infinity();
  int unresolved = 0, phase = 0;
  bool broken = false;
  double violation = 0.0, first_pos = pr.Y;
  double y0_lo = pr.x_min, y0_hi = pr.Y;
  double cross_lo = pr.Y, cross_hi = pr.x_min;
  std::string diag;
  for (const Cell& c : cells) {
    switch (c.kind) {
      case CellKind::unresolved:
        ++unresolved;
        break;
      case CellKind::zero:
        break;
      case CellKind::neg:
        if (phase == 2 && c.slack > 0 && violation == 0.0) {
          char buf[128];
          std::snprintf(buf, sizeof buf, "F - G < 0 on [%.6g, %.6g] after F - G > 0 at %.6g", c.u, c.v, first_pos);
          diag = buf;
          violation = c.slack;
        }
        if (phase > 0) broken = true;
        // A cell admitted only through tol may still hold the crossing.
        y0_lo = std::max(y0_lo, c.slack > 0 ? c.v : c.u);
        break;
      case CellKind::crossing:
        if (phase == 2) broken = true;
        phase = std::max(phase, 1);
        cross_lo = std::min(cross_lo, c.u);
        cross_hi = std::max(cross_hi, c.v);
        break;
      case CellKind::pos:
        if (phase < 2) first_pos = c.u;
        phase = 2;
        y0_hi = std::min(y0_hi, c.slack > 0 ? c.u : c.v);
        break;
    }
    slack = std::min(slack, c.slack);
  }
  if (cross_lo < cross_hi) {
    y0_lo = std::max(y0_lo, cross_lo);
    y0_hi = std::min(y0_hi, cross_hi);
  }

  Interval margin;
  std::string note;
  const Cell& first = cells.front();
  const Cell& last = cells.back();
  if (violation > 0) {
    margin = Interval(-violation);
    note = "more than one sign change: " + diag;
  } else if (last.kind == CellKind::neg && last.slack > 0) {
    margin = Interval(-last.slack);
    note = "F - G < 0 up to Y: no sign change";
  } else if (unresolved > 0 || broken || (first.kind == CellKind::pos && first.slack > 0)) {
    margin = Interval::raw(-1.0, std::max(0.0, slack));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d unresolved cells%s%s", unresolved, broken ? "; cell order not monotone" : "",
                  first.kind == CellKind::pos ? "; F - G > 0 already at x_min" : "");
    note = buf;
  } else {
    margin = Interval(std::max(slack, -pr.tol));
    char buf[128];
    std::snprintf(buf, sizeof buf, "y0 in [%.6g, %.6g]", y0_lo, y0_hi);
    note = buf;
  }
  CheckResult h1 = leaf("single sign change of F - G", margin, false, cls.evaluations());
  h1.note = note;
  if (h1.status == Status::proved) h1.value = Interval(std::min(y0_lo, y0_hi), std::max(y0_lo, y0_hi));

  std::vector<CheckResult> ch{std::move(h1)};
  if (pr.integral_check) {
    CheckResult h2 = pr.integral_check();
    h2.name = "moment condition at s0";
    ch.push_back(std::move(h2));
  }
  CheckResult r = composite("np", std::move(ch));
  r.elapsed_ms = sw.ms();
  return r;
}

NpProblem cos_gauss_np_problem(const Interval& p, const VerifierConfig& cfg) {
  NpProblem pr;
  int K = cfg.terms;
  pr.F = [p, K](const Interval& x) { return f_star(x, MeasureParams(p), K); };
  pr.G = [p](const Interval& x) { return g_star(x, MeasureParams(p)); };
  pr.dFG = [p, K](const Interval& x) {
    DistDerivatives d = derivatives(x, MeasureParams(p), K);
    return d.f - d.g;
  };
  pr.integral_check = [p, cfg]() {
    std::uint64_t ev = 0;
    Interval h = conclusion_integral(p, sqrt2(), cfg, &ev);
    return detail::with_value(leaf("", h, true, ev), h);
  };
  return pr;
}

CheckResult check_np(const VerifierConfig& cfg) {
  std::vector<CheckResult> ch;
  for (double p : {2.0, 2.25, 2.5, 2.75, 3.0}) {
    CheckResult r = np_generic(cos_gauss_np_problem(Interval(p), cfg));
    char buf[32];
    std::snprintf(buf, sizeof buf, "p = %g", p);
    r.name = buf;
    // The crossing must sit where the cond1 checks put it.
    const CheckResult& h1 = r.children.front();
    if (h1.value) {
      Interval y0 = *h1.value;
      Interval m = min(Interval(y0.lo()) - Interval(1.0 / 15.0), Interval(0.97) - Interval(y0.hi()));
      CheckResult loc = detail::with_value(leaf("y0 in (1/15, 0.97)", m), y0);
      r.children.push_back(std::move(loc));
      r = composite(r.name, std::move(r.children));
    }
    ch.push_back(std::move(r));
  }
  return composite("np", std::move(ch));
}

}  // namespace khv

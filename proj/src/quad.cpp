#include "khv/quad.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace khv {

void validate(const QuadConfig& cfg) {
  if (cfg.max_depth < 10) throw DomainError("QuadConfig: max_depth must be >= 10");
  if (!(cfg.target_width > 0)) throw DomainError("QuadConfig: target_width must be > 0");
  if (!(cfg.tail_cutoff >= 1.5707963267948966)) throw DomainError("QuadConfig: tail_cutoff must be >= pi/2");
}

namespace {

struct Cell {
  double u, v;
  int depth;
  Interval e;
  std::int64_t left = -1;  // children at left and left + 1
};

class Integrator {
public:
  Integrator(const Integrand& f, double a, double b, const QuadConfig& cfg)
      : f_(f), a_(a), b_(b), cfg_(cfg) {}

  QuadResult run() {
    QuadResult res;
    std::vector<Cell> cells;
    std::vector<std::int64_t> level;
    // Split at the near-zero boundary so every cell is of one kind.
    if (f_.near_zero && f_.near_zero->upto > a_ && f_.near_zero->upto < b_) {
      cells.push_back(make_cell(a_, f_.near_zero->upto, 0));
      cells.push_back(make_cell(f_.near_zero->upto, b_, 0));
    } else {
      cells.push_back(make_cell(a_, b_, 0));
    }
    const std::int64_t roots = static_cast<std::int64_t>(cells.size());
    for (std::int64_t i = 0; i < roots; ++i) level.push_back(i);
    double len = b_ - a_;
    double done_width = 0.0;
    // Breadth first: a level is refined only if the budget covers all of it,
    // so an exhausted budget still leaves a uniform partition.
    while (!level.empty()) {
      std::vector<std::int64_t> pending;
      double pending_width = 0.0;
      for (std::int64_t i : level) {
        const Cell& c = cells[i];
        if (c.e.width() <= cfg_.target_width * ((c.v - c.u) / len)) {
          done_width += c.e.width();
        } else {
          pending.push_back(i);
          pending_width += c.e.width();
        }
      }
      level.clear();
      // Stop early once the whole partition already meets the target.
      if (done_width + pending_width <= 0.5 * cfg_.target_width) break;
      bool budget_ok = evaluations_ + 2 * pending.size() <= cfg_.max_evaluations;
      for (std::int64_t i : pending) {
        double u = cells[i].u, v = cells[i].v, m = 0.5 * (u + v);
        int depth = cells[i].depth;
        if (budget_ok && depth < cfg_.max_depth && m > u && m < v) {
          std::int64_t l = static_cast<std::int64_t>(cells.size());
          cells[i].left = l;
          cells.push_back(make_cell(u, m, depth + 1));
          cells.push_back(make_cell(m, v, depth + 1));
          level.push_back(l);
          level.push_back(l + 1);
        } else {
          res.status = QuadStatus::wide;
          done_width += cells[i].e.width();
        }
      }
    }
    // Children come after their parent: combine bottom-up, keeping the
    // narrower of a cell's own enclosure and its children's sum, so refining
    // further never widens the result.
    for (std::int64_t i = static_cast<std::int64_t>(cells.size()) - 1; i >= 0; --i) {
      Cell& c = cells[i];
      if (c.left < 0) continue;
      Interval s = cells[c.left].e + cells[c.left + 1].e;
      c.e = s.overlaps(c.e) ? intersect(s, c.e) : s;
    }
    Interval sum(0.0);
    for (std::int64_t i = 0; i < roots; ++i) sum += cells[i].e;
    res.value = sum;
    if (sum.width() > cfg_.target_width) res.status = QuadStatus::wide;
    res.evaluations = evaluations_;
    return res;
  }

private:
  Cell make_cell(double u, double v, int depth) { return {u, v, depth, enclose(u, v)}; }

  Interval enclose(double u, double v) {
    ++evaluations_;
    Interval U(u), V(v);
    Interval h = V - U;
    if (f_.near_zero && v <= f_.near_zero->upto && u >= 0) {
      const NearZero& nz = *f_.near_zero;
      Interval a1 = nz.alpha + Interval(1.0);
      Interval pv = pow_real(V, a1);
      Interval pu = u == 0 ? Interval(0.0) : pow_real(U, a1);
      Interval wi = (pv - pu) / a1;
      Interval w = Interval::raw(std::max(0.0, wi.lo()), wi.hi());
      // With a wide alpha the difference above loses everything on small cells.
      if (u > 0) {
        Interval mv = pow_real(Interval(u, v), nz.alpha) * h;
        if (mv.overlaps(w)) w = intersect(w, mv);
      }
      // The weight t^alpha is positive, so the mean value theorem applies.
      return nz.cofactor(Interval(u, v)) * w;
    }
    Interval crude = f_.f(Interval(u, v)) * h;
    if (!f_.taylor2) return crude;
    try {
      double m = 0.5 * u + 0.5 * v;
      Interval M(m);
      auto at_m = f_.taylor2(M);
      auto on_cell = f_.taylor2(Interval(u, v));
      Interval hl = M - U, hr = V - M;
      Interval first = at_m[1] * (sqr(hr) - sqr(hl)) / Interval(2.0);
      Interval second = on_cell[2] * (pown(hr, 3) + pown(hl, 3)) / Interval(6.0);
      Interval expansion = at_m[0] * h + first + second;
      if (!expansion.overlaps(crude)) return crude;
      return intersect(crude, expansion);
    } catch (const DomainError&) {
      return crude;
    }
  }

  const Integrand& f_;
  double a_, b_;
  const QuadConfig& cfg_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  validate(cfg);
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate needs finite a < b");
  return Integrator(f, a, b, cfg).run();
}

QuadResult integrate(const FnEnclosure& f, double a, double b, const QuadConfig& cfg) {
  Integrand g;
  g.f = f;
  return integrate(g, a, b, cfg);
}

Interval power_tail(double k, const Interval& p, double T) {
  if (!(T > 0)) throw DomainError("power_tail needs T > 0");
  Interval e = p - Interval(k);
  if (!(e.lo() > 0)) throw DomainError("power_tail needs p > k");
  return pow_real(Interval(T), -e) / e;
}

Interval tail_bound_mu_p(TailKind kind, const Interval& s, const Interval& p, double T) {
  if (p.lo() < 2 || p.hi() > 3) throw DomainError("tail_bound_mu_p needs p in [2, 3]");
  switch (kind) {
    case TailKind::one:
      return power_tail(0.0, p, T);
    case TailKind::cos_power: {
      if (!(T >= 1.5707963267948966)) throw DomainError("tail cutoff below pi/2");
      if (s.lo() < 1) throw DomainError("tail_bound_mu_p needs s >= 1");
      return Interval::raw(0.0, power_tail(0.0, p, T).hi());
    }
    case TailKind::gauss: {
      if (!(T >= 1.5707963267948966)) throw DomainError("tail cutoff below pi/2");
      if (s.lo() < 1) throw DomainError("tail_bound_mu_p needs s >= 1");
      // exp(-s t^2/2) <= exp(-s T t/2) and t^{-p-1} <= T^{-p-1} for t >= T.
      Interval TT(T);
      Interval b = Interval(2.0) / (s * TT) * pow_real(TT, -(p + Interval(1.0))) *
                   exp(-s * sqr(TT) / Interval(2.0));
      return Interval::raw(0.0, b.hi());
    }
  }
  throw DomainError("unknown tail kind");
}

}  // namespace khv

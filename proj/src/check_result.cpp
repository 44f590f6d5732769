#include "khv/check_result.hpp"

#include <algorithm>

namespace khv {

Status status_of(const Interval& margin, bool strict) {
  double tol = strict ? 0.0 : kNonStrictTol;
  if (margin.lo() > -tol) return Status::proved;
  if (margin.hi() < -tol) return Status::failed;
  return Status::inconclusive;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::proved: return "proved";
    case Status::failed: return "failed";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Status status_from_string(const std::string& s) {
  if (s == "proved") return Status::proved;
  if (s == "failed") return Status::failed;
  if (s == "inconclusive") return Status::inconclusive;
  throw DomainError("unknown status '" + s + "'");
}

CheckResult leaf(std::string name, const Interval& margin, bool strict, std::uint64_t evaluations) {
  CheckResult r;
  r.name = std::move(name);
  r.margin = margin;
  r.strict = strict;
  r.status = status_of(margin, strict);
  r.evaluations = evaluations;
  return r;
}

CheckResult composite(std::string name, std::vector<CheckResult> children) {
  if (children.empty()) throw DomainError("composite check without children");
  CheckResult r;
  r.name = std::move(name);
  r.strict = true;
  double lo = std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& c : children) {
    Interval m = c.strict ? c.margin : c.margin + Interval(kNonStrictTol);
    // A non-strict child with lo in (-tol, 0] must still count as proved.
    if (!c.strict && c.status == Status::proved && !(m.lo() > 0)) m = Interval::raw(0x1p-1074, std::max(m.hi(), 0x1p-1074));
    lo = std::min(lo, m.lo());
    hi = std::min(hi, m.hi());
    r.evaluations += c.evaluations;
    r.elapsed_ms += c.elapsed_ms;
  }
  r.margin = Interval::raw(lo, std::max(lo, hi));
  r.status = status_of(r.margin, true);
  r.children = std::move(children);
  return r;
}

bool statuses_consistent(const CheckResult& r) {
  if (status_of(r.margin, r.strict) != r.status) return false;
  return std::all_of(r.children.begin(), r.children.end(), statuses_consistent);
}

}  // namespace khv

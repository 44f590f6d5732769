#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khv/interval.hpp"

namespace khv {

enum class Status { proved, failed, inconclusive };

// Slack allowed below zero for claims that hold with equality in a limit.
inline constexpr double kNonStrictTol = 1e-12;

// A check certifies "quantity >= 0" (or > 0); `margin` encloses the quantity.
struct CheckResult {
  std::string name;
  Status status = Status::inconclusive;
  Interval margin;
  bool strict = true;
  std::optional<Interval> value;  // the headline quantity, when it differs from the margin
  std::string note;
  std::vector<CheckResult> children;
  std::uint64_t evaluations = 0;
  double elapsed_ms = 0.0;
};

Status status_of(const Interval& margin, bool strict);
const char* to_string(Status s);
Status status_from_string(const std::string& s);

CheckResult leaf(std::string name, const Interval& margin, bool strict = true,
                 std::uint64_t evaluations = 1);

// Margin of a composite: minimum over children of their margins, where a
// non-strict child's margin is shifted by kNonStrictTol. The composite is
// strict, so it is proved exactly when every child is.
CheckResult composite(std::string name, std::vector<CheckResult> children);

// Recursively checks that every stored status matches its margin.
bool statuses_consistent(const CheckResult& r);

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace khv

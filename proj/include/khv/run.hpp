#pragma once

#include "khv/report.hpp"
#include "khv/verifier.hpp"

namespace khv {

VerifierConfig verifier_config(const RunConfig& cfg);

// B_p at a few p and the special-function anchors.
CheckResult check_constants();

// Runs the selected suite and writes the report to cfg.out_path when set.
// Throws DomainError on an invalid config and std::runtime_error on I/O failure.
Report run(const RunConfig& cfg);

// 0 when everything is proved, 1 on any failure, 2 otherwise.
int exit_code(const Report& r);

}  // namespace khv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace resetwalk {

// One pass/fail line of a validation battery.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // e.g. "max rel err 2.3e-10 (tol 1e-06)"
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// Suite names accepted by run_suite, in display order:
//   transforms    -- jump-law transforms vs quadrature, propagator identities,
//                    stationary characteristic function / density consistency
//   closed-forms  -- closed-form survival transforms and MFPTs: s = 0 limits,
//                    direction mixing, frozen reference values, benchmarks
//   mc-vs-analytic-- Monte Carlo estimators against the analytic results
//                    (the only suite that consumes n_paths)
//   inversion     -- Laplace-inversion back-ends: known transform pairs,
//                    kernel-route cross-checks, survival/MFPT consistency
//   optimize      -- optimal reset rates: root residuals, closed form vs
//                    numeric minimizer, regime classification
const std::vector<std::string>& validation_suites();

// Run one battery. n_paths = 0 selects the default (10^6 for mc-vs-analytic;
// deterministic suites ignore it). Monte Carlo agreement bands are 4 standard
// errors at >= 10^5 paths and widen to 5 below that (fast mode); the
// stationary-law L1 threshold scales as sqrt(10^6 / n_paths) from its 0.02
// default. Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& suite, std::uint64_t n_paths = 0);

} // namespace resetwalk

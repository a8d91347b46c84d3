#ifndef PV_SELFTEST_HPP
#define PV_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pv {

enum class CheckStatus { pass, fail, budget_exceeded };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    unsigned long budget = 200000;
    unsigned jobs = 1;
    unsigned max_order = 4;
};

struct SelftestReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
    bool any_budget_exceeded = false;
};

// Runs the full invariant suite at default sizes. Deterministic for a fixed
// seed: each check derives its generator from (seed, check name), so the
// report is independent of the job count.
SelftestReport run_selftest(const SelftestOptions& opts);

}  // namespace pv

#endif

#ifndef TOROIDAL_SUITE_HPP
#define TOROIDAL_SUITE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace toroidal {

/// Parameters of the acceptance suite. Criteria 1-3 use their fixed root
/// systems; the remaining ones use `type`.
struct SuiteConfig {
    std::string type = "A1";
    int max_delta = 3;   ///< delta-depth cap of the rank comparison
    int max_delta_q = 2; ///< delta-depth cap of the presented module
    int max_s = 2;       ///< s-degree cap of the presented module
    int window = 6;      ///< D_max of the module axiom and factorization checks
    int tau = 2;         ///< tau range [-tau, tau] of the module axiom
    int rewrite_l = 5;   ///< largest l in the rewriting identities
    std::size_t budget = 20000;
    unsigned seed = 7;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t checked = 0;
    double seconds = 0;
    double limit_seconds = 0;
    std::vector<std::string> failures;
};

/// Runs the numbered criteria (all of 1..10 when `only` is empty). A
/// criterion fails on any failed check or when it exceeds its time limit.
/// Budget errors propagate as BudgetExceeded.
std::vector<CriterionResult> run_suite(const SuiteConfig& config, const std::vector<int>& only = {},
                                       const std::function<void(const CriterionResult&)>& on_done = {});

} // namespace toroidal

#endif

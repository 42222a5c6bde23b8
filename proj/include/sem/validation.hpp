#pragma once

#include "sem/expr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sem
{

/// Smooth factors used by the test grids and the CLI:
/// const (1), affine (1 + y/300), bump (1/(1 + (y/50)^2)) and kink
/// (the crystal factor at x with lambda = 10, nu = 1).
Expr g_catalog(const std::string& name, std::int64_t x);
const std::vector<std::string>& g_catalog_names();

struct CheckResult
{
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct SuiteReport
{
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool passed() const;
    double max_error() const;
    /// Checks that failed, for reporting.
    std::vector<const CheckResult*> failures() const;
};

SuiteReport identity_suite();         ///< SEM with remainder against brute force
SuiteReport reduction_suite();        ///< nu = 0 gives periodised Bernoulli polynomials
SuiteReport jump_suite();             ///< A_0 jumps by s(n) at integers
SuiteReport smoothness_suite();       ///< A_l continuous across integers, l >= 1
SuiteReport ladder_suite();           ///< A_{l+1}' = (l+1) A_l off the integers
SuiteReport integer_nu_suite();       ///< integer branch is the limit of the general one
SuiteReport reflection_suite();       ///< right-sided problems and their mirror images
SuiteReport antisymmetry_suite();     ///< F(-x) = -F(x) for the kink chain
SuiteReport jets_fd_suite();          ///< jets against finite differences
SuiteReport special_function_suite(); ///< Hurwitz zeta and Bernoulli identities

/// Suites by name; "all" expands to every suite above.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names);
const std::vector<std::string>& suite_names();

} // namespace sem

#pragma once

#include "sem/expr.hpp"
#include "sem/sem.hpp"

#include <cstdint>
#include <vector>

namespace sem
{

enum class Profile
{
    kink, ///< u(y) = 1/2 + atan(y / lambda) / pi
    flat, ///< u = const
};

/// Particles at n + u(n), n = -N..N, interacting through V = c |r|^-nu.
/// Positions in units of the lattice constant, forces in units of V''(h) h.
struct KinkCrystal
{
    std::int64_t N = 1000;
    double lambda = 10.0;
    double nu = 1.0;
    int order = 1;
    double delta = 1.0;
    Profile profile = Profile::kink;
};

void validate(const KinkCrystal& crystal);

double kink_displacement(double y, double lambda);
Expr kink_displacement(double lambda);

/// g(y) = -1/(nu+1) (1 + (u(y) - u(x)) / (y - x))^(-(nu+1)), undefined
/// (DomainError) closer than delta to x.
Expr g_factor(std::int64_t x, const KinkCrystal& crystal);

/// Tolerances used for the crystal integrals; tighter than the defaults
/// because forces near the kink centre are small differences.
SemOptions crystal_sem_options();

struct ForceBreakdown
{
    double total = 0.0;
    SemResult right; ///< n = x+1..N
    SemResult left;  ///< n = -N..x-1, after reflection
    /// Contribution of the order-k boundary term to the force, both sides.
    std::vector<double> boundary_by_order;
    double integral = 0.0;
};

double force_sem(std::int64_t x, const KinkCrystal& crystal,
                 const SemOptions& options = crystal_sem_options());
ForceBreakdown force_sem_detailed(std::int64_t x, const KinkCrystal& crystal,
                                  const SemOptions& options = crystal_sem_options());

inline constexpr std::int64_t kBruteForceLimit = 10'000'000;

/// Direct enumeration, ascending |n - x| with the two sides paired, and
/// pairwise summation. CapacityError for N > 10^7.
double force_brute(std::int64_t x, const KinkCrystal& crystal);

struct ScanRow
{
    double lambda = 0.0;
    int order = 0;
    double max_abs_err = 0.0;
    std::int64_t argmax = 0;
};

struct ScanSlope
{
    int order = 0;
    double slope = 0.0;
    std::vector<double> fitted_lambdas;
};

struct LambdaScan
{
    std::vector<ScanRow> rows;     ///< lambda-major, in input order
    std::vector<ScanSlope> slopes; ///< one per order
};

/// Max over all particles of |force_sem - force_brute| for each
/// (lambda, order), plus least-squares slopes of log(err) against
/// log(lambda) over the upper half of the sorted lambda list.
LambdaScan lambda_scan(const KinkCrystal& base, const std::vector<double>& lambdas,
                       const std::vector<int>& orders);

/// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace sem

#pragma once

#include "sem/bernoulli.hpp"

#include <cstdint>

namespace sem
{

inline constexpr double kEulerGamma = 0.5772156649015329;

/// Evaluation strategy for the Hurwitz zeta function.
///
/// The Euler-Maclaurin tail with K correction terms is valid for first
/// arguments z > -(2K - 1); anything below is rejected.
struct ZetaConfig
{
    int initial_terms = 16;       ///< M_0, smallest M + q used by the tail
    int max_terms = 1 << 14;      ///< ceiling for M before giving up
    int correction_terms = 15;    ///< K
    double target_rel_tol = 1e-13;
};

/// Value plus the bookkeeping callers may want to surface.
struct ZetaEvaluation
{
    double value = 0.0;
    int series_terms = 0;        ///< M used by the tail (0 for closed forms)
    bool ill_conditioned = false; ///< near-pole z or heavy cancellation
};

/// Hurwitz zeta zeta(z, q) = sum_{n>=0} (n + q)^{-z} for real z != 1,
/// q > 0, analytically continued in z.
///
///  - z a nonpositive integer -m: -B_{m+1}(q) / (m + 1) exactly.
///  - z < 0, q a small integer: functional equation for zeta(z) and
///    subtraction of the first q - 1 terms.
///  - otherwise: Euler-Maclaurin with M grown until the first omitted
///    correction term is below tolerance.
class HurwitzZeta
{
public:
    explicit HurwitzZeta(ZetaConfig config = {}, const BernoulliTable& table = bernoulli_table());

    double operator()(double z, double q) const { return evaluate(z, q).value; }
    ZetaEvaluation evaluate(double z, double q) const;

    const ZetaConfig& config() const noexcept { return config_; }

    /// Most negative first argument accepted (exclusive).
    double lowest_argument() const noexcept { return -(2.0 * config_.correction_terms - 1.0); }

private:
    ZetaEvaluation euler_maclaurin(double z, double q) const;
    ZetaEvaluation negative_integer_q(double z, std::int64_t q) const;

    ZetaConfig config_;
    const BernoulliTable* table_;
};

/// Default-configured evaluator shared across the library.
const HurwitzZeta& default_zeta();

double hurwitz_zeta(double z, double q);

/// H_k = sum_{j=1}^k 1/j, H_0 = 0.
double harmonic(std::int64_t k);

} // namespace sem

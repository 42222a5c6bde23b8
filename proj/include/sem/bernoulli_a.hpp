#pragma once

#include "sem/bernoulli.hpp"
#include "sem/zeta.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sem
{

/// s(y) = coefficient * y^(-exponent) on y > 0.
struct PowerLawInteraction
{
    double exponent = 1.0;
    double coefficient = 1.0;

    double operator()(double y) const;
};

/// Bernoulli-A functions A_0..A_L of a power-law interaction, the
/// coefficients of the singular Euler-Maclaurin boundary operator.
///
/// For s(y) = c y^(-nu),
///
///   A_l(y) = c sum_{k=0}^{l} (-1)^k C(l,k) y^(l-k) T_k(y),
///   T_k(y) = zeta(nu-k, ceil y) - y^(-(nu-k-1)) / (nu-k-1),
///
/// with T_k = gamma_e - H_{ceil(y)-1} + log y when nu is an integer and
/// k = nu - 1. The terms of this sum are of size y^(l+1-nu) while A_l is
/// of size y^(-nu), so for larger y the evaluator switches to the
/// expansion
///
///   A_l(y) ~ c sum_j (nu)_j / j! * B_{l+j+1}(1 + y - ceil y) / (l+j+1) * y^(-nu-j),
///
/// whichever of the two has the smaller error estimate. ceil(n) = n at
/// integers (left-continuous convention).
///
/// Accuracy: near machine precision for y < 4 at low order and for large
/// y. Between roughly y = 4 and y = 7 at orders 4-5 neither route is
/// exact; absolute errors there stay below about 1e-11.
class BernoulliAEvaluator
{
public:
    BernoulliAEvaluator(PowerLawInteraction interaction, int max_order,
                        const HurwitzZeta& zeta = default_zeta(),
                        const BernoulliTable& table = bernoulli_table());

    /// A_order(y). DomainError for y <= 0, CapacityError past max_order.
    double operator()(int order, double y) const;

    /// A_0(y)..A_order(y) in one pass.
    std::vector<double> all(int order, double y) const;

    /// The zeta closed form on its own, any y > 0.
    std::vector<double> closed_form(int order, double y) const;

    const PowerLawInteraction& interaction() const noexcept { return interaction_; }
    int max_order() const noexcept { return max_order_; }

    /// Conditioning warnings detected at construction (near-integer nu).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    struct Estimate
    {
        std::vector<double> value;
        std::vector<double> error;
    };

    Estimate closed_form_estimate(int order, double y) const;
    Estimate asymptotic_estimate(int order, double y) const;
    void check(int order, double y) const;

    PowerLawInteraction interaction_;
    int max_order_;
    double nu_;           // exponent, snapped to an integer when within 1e-12
    bool nu_is_integer_;
    const HurwitzZeta* zeta_;
    const BernoulliTable* table_;
    std::vector<std::vector<double>> binomial_;
    std::vector<std::string> warnings_;
};

/// B_{l+1}(1 + y - ceil y) / (l + 1): the Bernoulli-A functions of s = 1.
double periodized_bernoulli(int order, double y);

/// Brute-force C(y, beta) = sum_{n >= ceil y} s_beta(n) - int_y^inf s_beta(z) dz
/// with s_beta(z) = s(z) exp(-beta z). The sum stops once terms fall
/// below 1e-18 past their maximum; the integral uses the substitution
/// z = y - log(w) / beta on w in (0, 1]. Test oracle only.
double c_oracle(const PowerLawInteraction& interaction, double y, double beta,
                std::int64_t max_terms = 100'000'000);

} // namespace sem

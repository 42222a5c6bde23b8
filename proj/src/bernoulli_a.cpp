#include "sem/bernoulli_a.hpp"

#include "sem/errors.hpp"
#include "sem/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace sem
{

namespace
{

constexpr double kIntegerTol = 1e-12;
constexpr double kConditioningBand = 1e-6;
constexpr double kAsymptoticFloor = 4.0;
constexpr double kSeriesCutoff = 1e-17;
constexpr double kEps = std::numeric_limits<double>::epsilon();

} // namespace

double PowerLawInteraction::operator()(double y) const
{
    return coefficient * std::pow(y, -exponent);
}

BernoulliAEvaluator::BernoulliAEvaluator(PowerLawInteraction interaction, int max_order,
                                         const HurwitzZeta& zeta, const BernoulliTable& table)
    : interaction_(interaction), max_order_(max_order), zeta_(&zeta), table_(&table)
{
    if (max_order < 0)
        throw UsageError("BernoulliAEvaluator: negative max_order");
    if (!std::isfinite(interaction.exponent) || !std::isfinite(interaction.coefficient))
        throw DomainError("BernoulliAEvaluator: non-finite interaction");
    if (interaction.coefficient == 0.0)
        throw DomainError("BernoulliAEvaluator: interaction coefficient must be nonzero");

    const double nu = interaction.exponent;
    const double rounded = std::round(nu);
    const double gap = std::abs(nu - rounded);
    nu_is_integer_ = gap < kIntegerTol;
    nu_ = nu_is_integer_ ? rounded : nu;

    // The removable singularity sits at k = nu - 1; near (but not at) an
    // integer the zeta pole and the algebraic term cancel.
    if (!nu_is_integer_ && gap <= kConditioningBand && rounded - 1.0 >= 0.0 &&
        rounded - 1.0 <= max_order) {
        std::ostringstream os;
        os.precision(17);
        os << "exponent " << nu << " is within " << gap
           << " of an integer; Bernoulli-A values suffer cancellation against the zeta pole";
        warnings_.push_back(os.str());
    }
    const double lowest = nu - max_order;
    if (!std::isfinite(lowest) || (lowest <= zeta.lowest_argument() &&
                                   std::abs(lowest - std::round(lowest)) >= kIntegerTol)) {
        warnings_.push_back("closed form needs zeta arguments below the evaluator window; "
                            "only the large-argument expansion is available");
    }

    binomial_.resize(max_order + 1);
    for (int l = 0; l <= max_order; ++l) {
        binomial_[l].assign(l + 1, 1.0);
        for (int k = 1; k < l; ++k)
            binomial_[l][k] = binomial_[l - 1][k - 1] + binomial_[l - 1][k];
    }
}

void BernoulliAEvaluator::check(int order, double y) const
{
    if (!(y > 0.0) || !std::isfinite(y))
        throw DomainError("bernoulli_a: argument must be positive, got " + std::to_string(y));
    if (order < 0 || order > max_order_)
        throw CapacityError("bernoulli_a: order " + std::to_string(order) +
                            " exceeds evaluator max_order " + std::to_string(max_order_));
}

double BernoulliAEvaluator::operator()(int order, double y) const
{
    return all(order, y)[order];
}

std::vector<double> BernoulliAEvaluator::all(int order, double y) const
{
    check(order, y);
    if (y < kAsymptoticFloor)
        return closed_form(order, y);

    Estimate asym = asymptotic_estimate(order, y);
    bool good = true;
    for (int l = 0; l <= order; ++l)
        good = good && asym.error[l] <= 8.0 * kEps * std::abs(asym.value[l]) + 1e-300;
    if (good)
        return asym.value;

    Estimate cf = closed_form_estimate(order, y);
    for (int l = 0; l <= order; ++l)
        if (cf.error[l] < asym.error[l])
            asym.value[l] = cf.value[l];
    return asym.value;
}

std::vector<double> BernoulliAEvaluator::closed_form(int order, double y) const
{
    check(order, y);
    return closed_form_estimate(order, y).value;
}

BernoulliAEvaluator::Estimate BernoulliAEvaluator::closed_form_estimate(int order, double y) const
{
    const double q = std::ceil(y);
    const double c = interaction_.coefficient;

    std::vector<double> terms(order + 1);
    std::vector<double> magnitude(order + 1);
    for (int k = 0; k <= order; ++k) {
        const double z = nu_ - k;
        if (nu_is_integer_ && z == 1.0) {
            const double h = harmonic(static_cast<std::int64_t>(q) - 1);
            terms[k] = kEulerGamma - h + std::log(y);
            magnitude[k] = kEulerGamma + h + std::abs(std::log(y));
        } else {
            const double zeta = (*zeta_)(z, q);
            const double algebraic = std::pow(y, 1.0 - z) / (z - 1.0);
            terms[k] = zeta - algebraic;
            magnitude[k] = std::abs(zeta) + std::abs(algebraic);
        }
    }

    Estimate out{std::vector<double>(order + 1), std::vector<double>(order + 1)};
    for (int l = 0; l <= order; ++l) {
        double acc = 0.0;
        double mag = 0.0;
        double ypow = 1.0; // y^(l-k), built from k = l downwards
        for (int k = l; k >= 0; --k) {
            const double w = binomial_[l][k] * ypow;
            acc += ((k % 2) ? -w : w) * terms[k];
            mag += w * magnitude[k];
            ypow *= y;
        }
        out.value[l] = c * acc;
        out.error[l] = 8.0 * kEps * std::abs(c) * mag;
    }
    return out;
}

BernoulliAEvaluator::Estimate BernoulliAEvaluator::asymptotic_estimate(int order, double y) const
{
    const double c = interaction_.coefficient;
    const double t = 1.0 + y - std::ceil(y);
    const double two_pi = 2.0 * std::numbers::pi;
    const int max_degree = table_->max_degree();

    std::vector<double> periodic; // periodic[m] = B_m(t) / m, filled lazily
    auto p = [&](int m) {
        while (static_cast<int>(periodic.size()) <= m) {
            const int d = static_cast<int>(periodic.size());
            periodic.push_back(d == 0 ? 1.0 : table_->polynomial(d, t) / d);
        }
        return periodic[m];
    };

    Estimate out{std::vector<double>(order + 1), std::vector<double>(order + 1)};
    const double y_nu = std::pow(y, -nu_);
    for (int l = 0; l <= order; ++l) {
        // bound_j >= |term_j|, from max |B_m(t)/m!| <= 4/(2 pi)^m.
        double bound0 = 4.0 * y_nu / two_pi;
        for (int m = 1; m <= l; ++m)
            bound0 *= m / two_pi;

        double rising = 1.0; // (nu)_j / j!
        double ypow = y_nu;  // y^(-nu-j)
        double bound = bound0;
        double sum = 0.0;
        double abs_sum = 0.0;
        double error = std::numeric_limits<double>::infinity();
        for (int j = 0;; ++j) {
            const int m = l + j + 1;
            if (m > max_degree)
                break;
            const double term = rising * p(m) * ypow;
            sum += term;
            abs_sum += std::abs(term);

            const double next_rising = rising * (nu_ + j) / (j + 1);
            if (next_rising == 0.0) {
                error = 4.0 * kEps * abs_sum;
                break;
            }
            const double next_bound = bound * std::abs((nu_ + j) / (j + 1)) * (l + j + 1) / (two_pi * y);
            if (next_bound <= kSeriesCutoff * std::max(std::abs(sum), bound0)) {
                error = next_bound + 4.0 * kEps * abs_sum;
                break;
            }
            if (next_bound >= bound && j > 0) {
                // Past the smallest term of the divergent expansion.
                error = bound;
                break;
            }
            rising = next_rising;
            ypow /= y;
            bound = next_bound;
        }
        out.value[l] = c * sum;
        out.error[l] = std::abs(c) * error;
    }
    return out;
}

double periodized_bernoulli(int order, double y)
{
    if (!(y > 0.0))
        throw DomainError("periodized_bernoulli: argument must be positive");
    if (order < 0)
        throw UsageError("periodized_bernoulli: negative order");
    const double t = 1.0 + y - std::ceil(y);
    return bernoulli_polynomial(order + 1, t) / (order + 1);
}

double c_oracle(const PowerLawInteraction& interaction, double y, double beta,
                std::int64_t max_terms)
{
    if (!(beta > 0.0))
        throw DomainError("c_oracle: beta must be positive");
    if (!(y > 0.0))
        throw DomainError("c_oracle: y must be positive");
    const double nu = interaction.exponent;
    const double c = interaction.coefficient;

    // n^(-nu) e^(-beta n) decreases for n > nu / beta.
    const double peak = std::max(nu / beta, 0.0);
    double sum = 0.0;
    double comp = 0.0;
    std::int64_t count = 0;
    for (double n = std::ceil(y);; n += 1.0) {
        const double term = c * std::pow(n, -nu) * std::exp(-beta * n);
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        if (n > peak && std::abs(term) < 1e-18)
            break;
        if (++count > max_terms)
            throw ConvergenceError("c_oracle: sum not truncated within budget", sum + comp,
                                   std::abs(term));
    }

    QuadratureConfig cfg;
    cfg.abs_tol = 1e-16;
    cfg.rel_tol = 1e-14;
    auto integrand = [&](double w) { return c * std::pow(y - std::log(w) / beta, -nu); };
    const auto integral = integrate(integrand, 0.0, 1.0, cfg);
    return (sum + comp) - std::exp(-beta * y) / beta * integral.value;
}

} // namespace sem

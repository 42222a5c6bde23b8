#include "sem/zeta.hpp"

#include "sem/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sem
{

namespace
{

constexpr double kIntegerTol = 1e-12;
constexpr double kPoleWarning = 1e-6;
constexpr double kCancellationWarning = 1e3;
constexpr std::int64_t kDirectShiftLimit = 64;

// Neumaier compensated accumulator.
struct Accumulator
{
    double sum = 0.0;
    double comp = 0.0;
    double abs_sum = 0.0;

    void add(double v)
    {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
        abs_sum += std::abs(v);
    }

    double value() const { return sum + comp; }
};

} // namespace

HurwitzZeta::HurwitzZeta(ZetaConfig config, const BernoulliTable& table)
    : config_(config), table_(&table)
{
    if (config_.initial_terms < 1 || config_.max_terms < config_.initial_terms ||
        config_.correction_terms < 1 || !(config_.target_rel_tol > 0.0))
        throw UsageError("ZetaConfig: invalid parameters");
    if (2 * config_.correction_terms + 2 > table.max_degree())
        throw CapacityError("ZetaConfig: Bernoulli table too small for requested corrections");
}

ZetaEvaluation HurwitzZeta::evaluate(double z, double q) const
{
    if (!std::isfinite(z) || !std::isfinite(q))
        throw DomainError("hurwitz_zeta: non-finite argument");
    if (!(q > 0.0))
        throw DomainError("hurwitz_zeta: q must be positive, got " + std::to_string(q));

    const double zi = std::round(z);
    if (std::abs(z - zi) < kIntegerTol) {
        if (zi == 1.0)
            throw PoleError("hurwitz_zeta: pole at z = 1");
        if (zi <= 0.0) {
            const int m = static_cast<int>(-zi);
            if (m + 1 > table_->max_degree())
                throw CapacityError("hurwitz_zeta: z = " + std::to_string(zi) +
                                    " needs Bernoulli degree beyond the table");
            return {-table_->polynomial(m + 1, q) / (m + 1), 0, false};
        }
        return euler_maclaurin(zi, q);
    }

    if (z <= lowest_argument())
        throw DomainError("hurwitz_zeta: z = " + std::to_string(z) +
                          " is below the validity window of the Euler-Maclaurin tail");

    ZetaEvaluation out;
    if (z < 0.0 && q == std::floor(q) && q <= static_cast<double>(kDirectShiftLimit))
        out = negative_integer_q(z, static_cast<std::int64_t>(q));
    else
        out = euler_maclaurin(z, q);
    if (std::abs(z - 1.0) < kPoleWarning)
        out.ill_conditioned = true;
    return out;
}

ZetaEvaluation HurwitzZeta::euler_maclaurin(double z, double q) const
{
    const int K = config_.correction_terms;
    std::int64_t M = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(std::ceil(config_.initial_terms - q)));

    double value = 0.0;
    double omitted = 0.0;
    for (;;) {
        Accumulator acc;
        for (std::int64_t n = 0; n < M; ++n)
            acc.add(std::pow(static_cast<double>(n) + q, -z));

        const double w = static_cast<double>(M) + q;
        const double w_pow = std::pow(w, -z);
        acc.add(w_pow * w / (z - 1.0));
        acc.add(0.5 * w_pow);

        // factor_j = (z)_{2j-1} w^{-z-2j+1} / (2j)!
        double factor = z * w_pow / w / 2.0;
        for (int j = 1; j <= K; ++j) {
            acc.add(table_->number(2 * j) * factor);
            const double a = z + 2.0 * j - 1.0;
            const double b = z + 2.0 * j;
            factor *= a * b / ((2.0 * j + 1.0) * (2.0 * j + 2.0) * w * w);
        }
        omitted = std::abs(table_->number(2 * K + 2) * factor);
        value = acc.value();

        if (omitted <= config_.target_rel_tol * std::abs(value)) {
            ZetaEvaluation out{value, static_cast<int>(M), false};
            out.ill_conditioned = acc.abs_sum > kCancellationWarning * std::abs(value);
            return out;
        }
        const std::int64_t next = std::max<std::int64_t>(2 * M, config_.initial_terms);
        if (next > config_.max_terms)
            break;
        M = next;
    }
    throw ConvergenceError("hurwitz_zeta: tolerance not reached at z = " + std::to_string(z) +
                               ", q = " + std::to_string(q),
                           value, omitted);
}

// zeta(z) for z < 0 from the reflection formula, then
// zeta(z, q) = zeta(z) - sum_{n=1}^{q-1} n^{-z}. The subtracted terms
// share one sign, so nothing cancels catastrophically.
ZetaEvaluation HurwitzZeta::negative_integer_q(double z, std::int64_t q) const
{
    const double s = 1.0 - z;
    const ZetaEvaluation reflected = euler_maclaurin(s, 1.0);
    const double pi = std::numbers::pi;
    double zeta_z = std::pow(2.0, z) * std::pow(pi, z - 1.0) * std::sin(0.5 * pi * z) *
                    std::tgamma(s) * reflected.value;

    Accumulator acc;
    acc.add(zeta_z);
    for (std::int64_t n = 1; n < q; ++n)
        acc.add(-std::pow(static_cast<double>(n), -z));
    return {acc.value(), reflected.series_terms, reflected.ill_conditioned};
}

const HurwitzZeta& default_zeta()
{
    static const HurwitzZeta zeta;
    return zeta;
}

double hurwitz_zeta(double z, double q)
{
    return default_zeta()(z, q);
}

double harmonic(std::int64_t k)
{
    if (k < 0)
        throw DomainError("harmonic: negative index");
    if (k <= 32) {
        double h = 0.0;
        for (std::int64_t j = k; j >= 1; --j)
            h += 1.0 / static_cast<double>(j);
        return h;
    }
    // H_k = log k + gamma + 1/(2k) - sum_j B_{2j} / (2j k^{2j})
    const auto& table = bernoulli_table();
    const double kd = static_cast<double>(k);
    const double inv2 = 1.0 / (kd * kd);
    double tail = 0.0;
    double p = inv2;
    for (int j = 1; j <= 6; ++j) {
        tail += table.number(2 * j) / (2.0 * j) * p;
        p *= inv2;
    }
    return std::log(kd) + kEulerGamma + 0.5 / kd - tail;
}

} // namespace sem

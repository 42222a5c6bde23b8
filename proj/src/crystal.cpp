#include "sem/crystal.hpp"

#include "sem/errors.hpp"
#include "sem/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sem
{

void validate(const KinkCrystal& c)
{
    if (c.N < 1)
        throw UsageError("crystal: N must be at least 1");
    if (!(c.lambda > 0.0) || !std::isfinite(c.lambda))
        throw UsageError("crystal: lambda must be positive");
    if (!(c.nu > 0.0) || !std::isfinite(c.nu))
        throw UsageError("crystal: nu must be positive");
    if (c.order < 0)
        throw UsageError("crystal: negative order");
    if (!(c.delta > 0.0 && c.delta <= 1.0))
        throw UsageError("crystal: delta must lie in (0, 1]");
}

double kink_displacement(double y, double lambda)
{
    return 0.5 + std::atan(y / lambda) / std::numbers::pi;
}

Expr kink_displacement(double lambda)
{
    return 0.5 + atan(Expr::identity() / lambda) / std::numbers::pi;
}

Expr g_factor(std::int64_t x, const KinkCrystal& c)
{
    validate(c);
    const double p = c.nu + 1.0;
    if (c.profile == Profile::flat)
        return Expr(-1.0 / p).excluding(static_cast<double>(x), c.delta);

    // u(y) - u(x) written as a difference of arctangents so the constant
    // 1/2 never enters the cancellation.
    const Expr y = Expr::identity();
    const double xd = static_cast<double>(x);
    const Expr du = (atan(y / c.lambda) - std::atan(xd / c.lambda)) / std::numbers::pi;
    const Expr g = (-1.0 / p) * pow(1.0 + du / (y - xd), -p);
    return g.excluding(xd, c.delta);
}

SemOptions crystal_sem_options()
{
    SemOptions o;
    o.integral.abs_tol = 1e-15;
    o.integral.rel_tol = 1e-13;
    o.remainder.abs_tol = 1e-15;
    o.remainder.rel_tol = 1e-12;
    return o;
}

ForceBreakdown force_sem_detailed(std::int64_t x, const KinkCrystal& c, const SemOptions& options)
{
    validate(c);
    if (x < -c.N || x > c.N)
        throw DomainError("force_sem: particle " + std::to_string(x) + " outside the chain");

    SemProblem right;
    right.interaction = {c.nu + 1.0, 1.0};
    right.parity = Parity::odd;
    right.g = g_factor(x, c);
    right.x = x;
    right.a = x;
    right.b = c.N;
    right.delta = c.delta;
    right.order = c.order;
    right.side = SingularitySide::left;

    SemProblem left = right;
    left.a = -c.N - 1;
    left.b = x - 1;
    left.side = SingularitySide::right;

    ForceBreakdown out;
    out.right = sem_sum(right, false, options);
    out.left = sem_sum(left, false, options);
    out.total = out.right.total + out.left.total;
    out.integral = out.right.integral_part + out.left.integral_part;
    out.boundary_by_order.assign(c.order + 1, 0.0);
    for (int k = 0; k <= c.order; ++k)
        out.boundary_by_order[k] = -(out.right.boundary_by_order[k] + out.left.boundary_by_order[k]);
    return out;
}

double force_sem(std::int64_t x, const KinkCrystal& c, const SemOptions& options)
{
    return force_sem_detailed(x, c, options).total;
}

double force_brute(std::int64_t x, const KinkCrystal& c)
{
    validate(c);
    if (c.N > kBruteForceLimit)
        throw CapacityError("force_brute: N = " + std::to_string(c.N) + " exceeds " +
                            std::to_string(kBruteForceLimit));
    if (x < -c.N || x > c.N)
        throw DomainError("force_brute: particle " + std::to_string(x) + " outside the chain");

    const double p = c.nu + 1.0;
    const bool flat = c.profile == Profile::flat;
    const double atan_x = std::atan(static_cast<double>(x) / c.lambda);
    auto f = [&](std::int64_t n) {
        double d = static_cast<double>(n - x);
        if (!flat)
            d += (std::atan(static_cast<double>(n) / c.lambda) - atan_x) / std::numbers::pi;
        const double mag = std::pow(std::abs(d), -p) / p;
        return d > 0.0 ? -mag : mag;
    };

    PairwiseAccumulator acc;
    const std::int64_t reach = std::max(c.N - x, x + c.N);
    for (std::int64_t k = 1; k <= reach; ++k) {
        const bool has_right = x + k <= c.N;
        const bool has_left = x - k >= -c.N;
        if (has_right && has_left)
            acc.add(f(x + k) + f(x - k));
        else if (has_right)
            acc.add(f(x + k));
        else
            acc.add(f(x - k));
    }
    return acc.sum();
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw UsageError("log_log_slope: need at least two matching points");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw DomainError("log_log_slope: nonpositive data");
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - sx / n;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - sy / n);
    }
    if (sxx == 0.0)
        throw DomainError("log_log_slope: degenerate abscissae");
    return sxy / sxx;
}

LambdaScan lambda_scan(const KinkCrystal& base, const std::vector<double>& lambdas,
                       const std::vector<int>& orders)
{
    validate(base);
    if (lambdas.empty() || orders.empty())
        throw UsageError("lambda_scan: empty lambda or order list");

    LambdaScan out;
    for (double lambda : lambdas) {
        KinkCrystal c = base;
        c.lambda = lambda;
        validate(c);
        std::vector<double> brute(2 * c.N + 1);
        for (std::int64_t x = -c.N; x <= c.N; ++x)
            brute[x + c.N] = force_brute(x, c);
        for (int order : orders) {
            c.order = order;
            ScanRow row{lambda, order, 0.0, 0};
            for (std::int64_t x = -c.N; x <= c.N; ++x) {
                const double err = std::abs(force_sem(x, c) - brute[x + c.N]);
                if (err > row.max_abs_err) {
                    row.max_abs_err = err;
                    row.argmax = x;
                }
            }
            out.rows.push_back(row);
        }
    }

    std::vector<double> sorted = lambdas;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::vector<double> upper(sorted.begin() + sorted.size() / 2, sorted.end());
    for (int order : orders) {
        ScanSlope s{order, std::nan(""), {}};
        std::vector<double> errs;
        for (double lambda : upper)
            for (const auto& row : out.rows)
                if (row.order == order && row.lambda == lambda && row.max_abs_err > 0.0) {
                    s.fitted_lambdas.push_back(lambda);
                    errs.push_back(row.max_abs_err);
                    break;
                }
        if (s.fitted_lambdas.size() >= 2)
            s.slope = log_log_slope(s.fitted_lambdas, errs);
        out.slopes.push_back(s);
    }
    return out;
}

} // namespace sem

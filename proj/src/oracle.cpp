#include "sem/oracle.hpp"

#include <algorithm>
#include <string>

namespace sem
{

void PairwiseAccumulator::add(double v)
{
    ++count_;
    for (std::size_t level = 0;; ++level) {
        if (level == levels_.size()) {
            levels_.push_back(v);
            full_.push_back(true);
            return;
        }
        if (!full_[level]) {
            levels_[level] = v;
            full_[level] = true;
            return;
        }
        v += levels_[level];
        full_[level] = false;
    }
}

double PairwiseAccumulator::sum() const
{
    double acc = 0.0;
    for (std::size_t level = 0; level < levels_.size(); ++level)
        if (full_[level])
            acc += levels_[level];
    return acc;
}

double brute_sum(const std::function<double(double)>& f, std::int64_t a, std::int64_t b,
                 const OracleBudget& budget)
{
    if (budget.max_terms < 1)
        throw UsageError("brute_sum: max_terms must be positive");
    if (b <= a)
        return 0.0;
    if (b - a > budget.max_terms)
        throw CapacityError("brute_sum: " + std::to_string(b - a) + " terms exceed budget " +
                            std::to_string(budget.max_terms));
    PairwiseAccumulator acc;
    for (std::int64_t n = a + 1; n <= b; ++n)
        acc.add(f(static_cast<double>(n)));
    return acc.sum();
}

FdDerivative fd_derivative(const std::function<double(double)>& f, double y, int k, double h)
{
    if (k < 0 || k > 2)
        throw UsageError("fd_derivative: order must be 0, 1 or 2");
    if (k == 0)
        return {f(y), 0.0};
    if (!(h > 0.0))
        h = 0.02 * std::max(1.0, std::abs(y));

    auto central = [&](double s) {
        if (k == 1)
            return (f(y + s) - f(y - s)) / (2.0 * s);
        return (f(y + s) - 2.0 * f(y) + f(y - s)) / (s * s);
    };
    // Error expansion in even powers of the step: halve and eliminate twice.
    const double d0 = central(h);
    const double d1 = central(h / 2.0);
    const double d2 = central(h / 4.0);
    const double r01 = (4.0 * d1 - d0) / 3.0;
    const double r12 = (4.0 * d2 - d1) / 3.0;
    const double r = (16.0 * r12 - r01) / 15.0;
    return {r, std::abs(r - r12)};
}

} // namespace sem

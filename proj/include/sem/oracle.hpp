#pragma once

#include "sem/errors.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace sem
{

struct OracleBudget
{
    std::int64_t max_terms = 100'000'000;
    double reference_tol = 1e-13;
};

/// Streaming pairwise summation: a binary counter of partial sums, so
/// memory is O(log n) and the error grows like O(log n) eps.
class PairwiseAccumulator
{
public:
    void add(double v);
    double sum() const;
    std::int64_t count() const noexcept { return count_; }

private:
    std::vector<double> levels_; // levels_[i] holds a block of 2^i terms
    std::vector<bool> full_;
    std::int64_t count_ = 0;
};

/// sum_{n=a+1}^{b} f(n). Empty when b <= a.
double brute_sum(const std::function<double(double)>& f, std::int64_t a, std::int64_t b,
                 const OracleBudget& budget = {});

struct FdDerivative
{
    double value = 0.0;
    double error = 0.0;
};

/// k-th derivative (k <= 2) by central differences at steps h, h/2, h/4
/// followed by Richardson extrapolation. Default h = 0.02 max(1, |y|).
FdDerivative fd_derivative(const std::function<double(double)>& f, double y, int k,
                           double h = 0.0);

} // namespace sem

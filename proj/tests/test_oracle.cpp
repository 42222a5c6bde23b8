#include "sem/errors.hpp"
#include "sem/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace sem;

TEST(BruteSum, Examples)
{
    EXPECT_EQ(brute_sum([](double) { return 1.0; }, 0, 5), 5.0);
    EXPECT_NEAR(brute_sum([](double n) { return 1.0 / (n * n); }, 1, 100), 0.63498390018489286, 1e-16);
    EXPECT_EQ(brute_sum([](double) { return 1.0; }, 3, 3), 0.0);
    EXPECT_EQ(brute_sum([](double) { return 1.0; }, 3, 1), 0.0);
}

TEST(BruteSum, Budget)
{
    OracleBudget budget;
    budget.max_terms = 10;
    EXPECT_THROW(brute_sum([](double) { return 1.0; }, 0, 11, budget), CapacityError);
    EXPECT_NO_THROW(brute_sum([](double) { return 1.0; }, 0, 10, budget));
}

TEST(PairwiseAccumulator, PermutationInvariance)
{
    std::vector<double> terms;
    for (int n = 1; n <= 5000; ++n)
        terms.push_back(std::pow(n, -1.5) * ((n % 3) ? 1.0 : -0.7));
    auto total = [](const std::vector<double>& v) {
        PairwiseAccumulator acc;
        for (double t : v)
            acc.add(t);
        return acc.sum();
    };
    const double reference = total(terms);
    std::mt19937 rng(11);
    for (int i = 0; i < 5; ++i) {
        auto shuffled = terms;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_NEAR(total(shuffled), reference, 1e-13 * std::abs(reference));
    }
    std::reverse(terms.begin(), terms.end());
    EXPECT_NEAR(total(terms), reference, 1e-13 * std::abs(reference));
}

TEST(PairwiseAccumulator, Count)
{
    PairwiseAccumulator acc;
    EXPECT_EQ(acc.sum(), 0.0);
    for (int i = 0; i < 37; ++i)
        acc.add(0.5);
    EXPECT_EQ(acc.count(), 37);
    EXPECT_EQ(acc.sum(), 18.5);
}

TEST(FdDerivative, Examples)
{
    EXPECT_NEAR(fd_derivative([](double y) { return std::exp(y); }, 0.0, 1).value, 1.0, 1e-9);
    EXPECT_NEAR(fd_derivative([](double y) { return std::atan(y); }, 1.0, 2).value, -0.5, 1e-5);
    EXPECT_NEAR(fd_derivative([](double) { return 4.2; }, 3.0, 1).value, 0.0, 1e-12);
    const auto d = fd_derivative([](double y) { return std::sin(y); }, 0.4, 2);
    EXPECT_NEAR(d.value, -std::sin(0.4), 1e-8);
    EXPECT_LT(d.error, 1e-6);
    EXPECT_THROW(fd_derivative([](double y) { return y; }, 0.0, 3), UsageError);
}

#include "sem/bernoulli.hpp"
#include "sem/errors.hpp"
#include "sem/zeta.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sem;

TEST(Bernoulli, PolynomialValues)
{
    EXPECT_DOUBLE_EQ(bernoulli_polynomial(1, 1.0), 0.5);
    EXPECT_DOUBLE_EQ(bernoulli_polynomial(2, 0.0), 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(bernoulli_polynomial(0, 0.3), 1.0);
    EXPECT_NEAR(bernoulli_polynomial(3, 0.25), 0.25 * 0.25 * 0.25 - 1.5 * 0.0625 + 0.5 * 0.25, 1e-15);
}

TEST(Bernoulli, Numbers)
{
    const auto& t = bernoulli_table();
    EXPECT_DOUBLE_EQ(t.number(0), 1.0);
    EXPECT_DOUBLE_EQ(t.number(1), -0.5);
    EXPECT_DOUBLE_EQ(t.number(2), 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(t.number(3), 0.0);
    EXPECT_DOUBLE_EQ(t.number(4), -1.0 / 30.0);
    EXPECT_NEAR(t.number(12), -691.0 / 2730.0, 1e-15);
    EXPECT_DOUBLE_EQ(t.number(21), 0.0);
}

TEST(Bernoulli, DerivativeRecurrence)
{
    // B_l' = l B_{l-1}, compared coefficientwise.
    const auto& t = bernoulli_table();
    for (int l = 1; l <= 20; ++l) {
        const auto hi = t.coefficients(l);
        const auto lo = t.coefficients(l - 1);
        for (int k = 1; k <= l; ++k)
            EXPECT_NEAR(k * hi[k], l * lo[k - 1], 1e-12 * std::max(1.0, std::abs(l * lo[k - 1])))
                << "l=" << l << " k=" << k;
    }
}

TEST(Bernoulli, CapacityAndSmallTables)
{
    EXPECT_THROW(bernoulli_table().polynomial(bernoulli_table().max_degree() + 1, 0.5), CapacityError);
    const BernoulliTable small(4);
    EXPECT_EQ(small.max_degree(), 4);
    EXPECT_NEAR(small.polynomial(4, 0.0), -1.0 / 30.0, 1e-16);
}

TEST(HurwitzZeta, ReferenceValues)
{
    EXPECT_NEAR(hurwitz_zeta(2.0, 1.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-15);
    EXPECT_NEAR(hurwitz_zeta(3.0, 2.0), 0.2020569031595943, 1e-15);
    EXPECT_NEAR(hurwitz_zeta(-1.0, 1.0), -1.0 / 12.0, 1e-16);
    EXPECT_NEAR(hurwitz_zeta(0.5, 1.0), -1.4603545088095868, 1e-14);
    EXPECT_NEAR(hurwitz_zeta(1.5, 0.25), 10.213055360466601, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(-0.5, 3.0), -2.6220997873504496, 1e-13);
    // Negative non-integer z with non-integer q goes through the tail sum.
    EXPECT_NEAR(hurwitz_zeta(-2.5, 1.5), -0.18378802955106201, 1e-11);
}

TEST(HurwitzZeta, NonPositiveIntegersUseBernoulli)
{
    // zeta(-n, q) = -B_{n+1}(q) / (n + 1)
    for (int n = 0; n <= 8; ++n)
        for (double q : {0.5, 1.0, 3.25, 7.0}) {
            const double expected = -bernoulli_polynomial(n + 1, q) / (n + 1);
            EXPECT_NEAR(hurwitz_zeta(-n, q), expected, 1e-12 * std::max(1.0, std::abs(expected)));
        }
}

TEST(HurwitzZeta, ShiftRecurrence)
{
    for (double z : {-3.5, -0.5, 0.5, 1.5, 2.0, 4.5})
        for (double q : {1.0, 2.5, 10.0}) {
            const double lhs = hurwitz_zeta(z, q) - hurwitz_zeta(z, q + 1.0);
            const double rhs = std::pow(q, -z);
            EXPECT_NEAR(lhs, rhs, 1e-11 * std::max(1.0, std::abs(hurwitz_zeta(z, q))))
                << "z=" << z << " q=" << q;
        }
}

TEST(HurwitzZeta, Errors)
{
    EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
    EXPECT_THROW(hurwitz_zeta(2.0, -1.0), DomainError);
    EXPECT_THROW(hurwitz_zeta(1.0, 1.0), PoleError);
    EXPECT_THROW(hurwitz_zeta(-40.5, 1.5), DomainError);
}

TEST(HurwitzZeta, WarnsNearThePole)
{
    const auto e = default_zeta().evaluate(1.0 + 1e-8, 2.0);
    EXPECT_TRUE(e.ill_conditioned);
    EXPECT_FALSE(default_zeta().evaluate(2.0, 2.0).ill_conditioned);
}

TEST(Harmonic, Values)
{
    EXPECT_DOUBLE_EQ(harmonic(0), 0.0);
    EXPECT_DOUBLE_EQ(harmonic(1), 1.0);
    EXPECT_NEAR(harmonic(10), 2.9289682539682538, 1e-15);
    EXPECT_NEAR(harmonic(1000), 7.4854708605503449, 1e-14);
    EXPECT_NEAR(harmonic(1'000'000) - std::log(1e6), kEulerGamma + 0.5e-6, 1e-12);
}

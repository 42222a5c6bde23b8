#include "sem/crystal.hpp"
#include "sem/errors.hpp"
#include "sem/oracle.hpp"
#include "sem/sem.hpp"
#include "sem/validation.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sem;

namespace
{

double brute(const SemProblem& p)
{
    return brute_sum(
        [&](double n) {
            const double d = n - static_cast<double>(p.x);
            double s = p.interaction.coefficient * std::pow(std::abs(d), -p.interaction.exponent);
            if (p.parity == Parity::odd && d < 0.0)
                s = -s;
            return s * p.g(n);
        },
        p.a, p.b);
}

} // namespace

TEST(SemOperator, ConstantFactorKeepsOnlyA0)
{
    const PowerLawInteraction s{2.0, 1.0};
    const BernoulliAEvaluator a(s, 4);
    for (int order = 0; order <= 4; ++order)
        EXPECT_NEAR(sem_operator_apply(order, s, 0, 1.0, 2.0), a(0, 2.0), 1e-15);
}

TEST(SemOperator, AffineFactorWithUnitInteraction)
{
    const PowerLawInteraction s{0.0, 1.0};
    for (double n : {1.0, 4.0, 11.0})
        EXPECT_NEAR(sem_operator_apply(1, s, 0, Expr::identity(), n), n / 2.0 - 1.0 / 12.0, 1e-13);
}

TEST(SemOperator, OrderZeroIsA0TimesG)
{
    const PowerLawInteraction s{1.5, 2.0};
    const Expr g = g_catalog("bump", 0);
    EXPECT_NEAR(sem_operator_apply(0, s, 0, g, 3.5), BernoulliAEvaluator(s, 0)(0, 3.5) * g(3.5), 1e-15);
    EXPECT_THROW(sem_operator_apply(0, s, 4, g, 3.5), DomainError);
}

TEST(SemSum, InverseSquareConstantFactor)
{
    SemProblem p;
    p.interaction = {2.0, 1.0};
    p.x = 0;
    p.a = 1;
    p.b = 100;
    p.order = 0;
    const auto r = sem_sum(p, false);
    EXPECT_NEAR(r.total, 0.63498390018489286, 1e-10);
    EXPECT_NEAR(r.total, r.integral_part - r.boundary_part, 1e-15);
    EXPECT_FALSE(r.remainder_part.has_value());
}

TEST(SemSum, CountingSum)
{
    SemProblem p;
    p.interaction = {0.0, 1.0};
    p.a = 0;
    p.b = 9;
    const auto r = sem_sum(p, false);
    EXPECT_NEAR(r.total, 9.0, 1e-13);
    EXPECT_NEAR(r.boundary_part, 0.0, 1e-15);
}

TEST(SemSum, BumpWithRemainder)
{
    SemProblem p;
    p.interaction = {2.0, 1.0};
    p.g = g_catalog("bump", 0);
    p.a = 3;
    p.b = 200;
    p.order = 3;
    const auto r = sem_sum(p, true);
    ASSERT_TRUE(r.remainder_part.has_value());
    EXPECT_NEAR(r.total, 0.25370510163075030, 1e-9);
    EXPECT_NEAR(r.total, r.integral_part - r.boundary_part + *r.remainder_part, 1e-15);
    double parts = 0.0;
    for (double v : r.boundary_by_order)
        parts += v;
    EXPECT_NEAR(parts, r.boundary_part, 1e-15);
}

TEST(SemSum, DeltaInvariance)
{
    SemProblem p;
    p.interaction = {1.0, 1.0};
    p.g = g_catalog("kink", -4);
    p.x = -4;
    p.a = -4;
    p.b = 120;
    p.order = 2;
    const double exact = brute(p);
    for (double delta : {0.5, 0.75, 1.0}) {
        p.delta = delta;
        EXPECT_NEAR(sem_sum(p, true).total, exact, 1e-9) << "delta=" << delta;
    }
}

TEST(SemSum, ApproximationImprovesWithOrder)
{
    for (double lambda : {10.0, 20.0}) {
        KinkCrystal c;
        c.lambda = lambda;
        SemProblem p;
        p.interaction = {2.0, 1.0};
        p.parity = Parity::odd;
        p.g = g_factor(0, c);
        p.a = 0;
        p.b = 300;
        const double exact = brute(p);
        auto err = [&](int order) {
            p.order = order;
            return std::abs(sem_sum(p, false, crystal_sem_options()).total - exact);
        };
        for (int order : {0, 1, 3, 5})
            EXPECT_LE(err(order + 2), err(order)) << "lambda=" << lambda << " order=" << order;
    }
}

TEST(SemSum, EmptyRangeIsZeroWithDiagnostic)
{
    SemProblem p;
    p.a = 5;
    p.b = 5;
    p.x = 5;
    const auto r = sem_sum(p, true);
    EXPECT_EQ(r.total, 0.0);
    EXPECT_FALSE(r.diagnostics.empty());
    p.b = 2;
    EXPECT_EQ(sem_sum(p, false).total, 0.0);
}

TEST(SemSum, SingularityInsideRange)
{
    SemProblem p;
    p.x = 3;
    p.a = 0;
    p.b = 10;
    EXPECT_THROW(sem_sum(p, false), DomainError);
    p.side = SingularitySide::right;
    EXPECT_THROW(sem_sum(p, false), DomainError);
}

TEST(SemSum, InvalidParameters)
{
    SemProblem p;
    p.delta = 1.5;
    EXPECT_THROW(sem_sum(p, false), UsageError);
    p.delta = 1.0;
    p.order = -2;
    EXPECT_THROW(sem_sum(p, false), UsageError);
}

TEST(Reflect, Indices)
{
    SemProblem p;
    p.side = SingularitySide::right;
    p.x = 0;
    p.a = -101;
    p.b = -2;
    auto q = reflect(p);
    EXPECT_EQ(q.a, 1);
    EXPECT_EQ(q.b, 100);
    EXPECT_EQ(q.side, SingularitySide::left);

    p.x = 5;
    p.a = 0;
    p.b = 4;
    q = reflect(p);
    EXPECT_EQ(q.a, 5);
    EXPECT_EQ(q.b, 9);
}

TEST(Reflect, ParitySign)
{
    SemProblem p;
    p.side = SingularitySide::right;
    p.interaction = {2.0, 3.0};
    p.x = 10;
    p.a = 0;
    p.b = 8;
    EXPECT_EQ(reflect(p).interaction.coefficient, 3.0);
    p.parity = Parity::odd;
    EXPECT_EQ(reflect(p).interaction.coefficient, -3.0);
}

TEST(Reflect, PreservesSums)
{
    SemProblem p;
    p.side = SingularitySide::right;
    p.interaction = {1.5, 1.0};
    p.parity = Parity::odd;
    p.x = 0;
    p.a = -101;
    p.b = -2;
    p.g = g_catalog("affine", 0);
    p.order = 2;
    const auto q = reflect(p);
    EXPECT_NEAR(brute(p), brute(q), 1e-14);
    EXPECT_NEAR(sem_sum(p, false).total, sem_sum(q, false).total, 1e-10);
    EXPECT_NEAR(sem_sum(p, true).total, brute(p), 1e-9);

    p.side = SingularitySide::left;
    EXPECT_THROW(reflect(p), UsageError);
}

TEST(Suites, IdentityAndReflection)
{
    for (const auto& r : run_suites({"identity", "reflection"})) {
        EXPECT_TRUE(r.passed()) << r.suite;
        EXPECT_GE(r.checks.size(), 100u) << r.suite;
    }
}

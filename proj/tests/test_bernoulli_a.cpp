#include "sem/bernoulli_a.hpp"
#include "sem/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sem;

namespace
{

double rel(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace

TEST(BernoulliA, ReferenceValues)
{
    struct Case
    {
        int order;
        double y, nu, value;
    };
    // High-precision closed-form values.
    const Case cases[] = {
        {0, 1.0, 2.0, 0.64493406684822644},
        {1, 1.0, 2.0, 0.067718401946693576},
        {2, 1.0, 2.0, -0.0094972629548392847},
        {3, 2.5, 0.5, 0.0044808002069685636},
        {1, 1.0, 1.0, 0.077215664901532861},
        {2, 7.3, 3.0, 3.7476887108977e-5},
        {4, 3.0, 0.5, 0.00035757070417055094},
        {1, 40.0, 2.0, 5.2073572547949362e-5},
        {3, 100.0, 2.0, -8.3321430654231791e-7},
        {5, 300.0, 2.0, 4.4090167600458560e-8},
        {0, 0.3, 1.5, -1.0391083680156191},
        {1, 12.5, 1.0, -0.0033296125111238786},
    };
    for (const auto& c : cases) {
        const BernoulliAEvaluator a({c.nu, 1.0}, 5);
        EXPECT_LT(rel(a(c.order, c.y), c.value), 1e-12 + 1e-13 / std::abs(c.value))
            << "order=" << c.order << " y=" << c.y << " nu=" << c.nu;
    }
}

TEST(BernoulliA, SimpleValues)
{
    const BernoulliAEvaluator two({2.0, 1.0}, 0);
    EXPECT_NEAR(two(0, 1.0), std::numbers::pi * std::numbers::pi / 6.0 - 1.0, 1e-14);

    const BernoulliAEvaluator one({0.0, 1.0}, 1);
    EXPECT_NEAR(one(0, 0.5), 0.0, 1e-15);
    EXPECT_NEAR(one(1, 3.0), 1.0 / 12.0, 1e-15);
}

TEST(BernoulliA, CoefficientScales)
{
    const BernoulliAEvaluator a({1.5, 1.0}, 3);
    const BernoulliAEvaluator b({1.5, -2.0}, 3);
    for (int l = 0; l <= 3; ++l)
        for (double y : {0.4, 2.0, 17.5})
            EXPECT_NEAR(b(l, y), -2.0 * a(l, y), 1e-14 * std::abs(a(l, y)) + 1e-300);
}

TEST(BernoulliA, HighPrecisionGrid)
{
    // Both evaluation routes are covered: y < 4 uses the closed form,
    // larger y mostly the large-argument series. Between y = 4 and 7 at
    // orders 4-5 neither reaches full precision; absolute errors stay
    // below 1e-11 there.
    struct Case
    {
        int order;
        double y, nu, value;
    };
    const Case cases[] = {
        {0, 2.5, 0.5, -0.0051836298277550052914},
        {2, 2.5, 0.5, 0.00087908153498310580705},
        {3, 2.5, 0.5, 0.0044808002069685635613},
        {5, 2.5, 0.5, -0.0022996350651226669951},
        {0, 4.5, 0.5, -0.0021708720664749553944},
        {2, 4.5, 0.5, 0.00037595230792468071771},
        {3, 4.5, 0.5, 0.0034049781100958913983},
        {5, 4.5, 0.5, -0.0017782495667021417347},
        {0, 6.5, 0.5, -0.0012539315567962274193},
        {2, 6.5, 0.5, 0.00021831947677754583357},
        {3, 6.5, 0.5, 0.002846883787530717564},
        {5, 6.5, 0.5, -0.0014938764050762192597},
        {0, 9, 0.5, 0.16820869124791795314},
        {2, 9, 0.5, -0.00015375964561575652195},
        {3, 9, 0.5, -0.002771710771493637584},
        {5, 9, 0.5, 0.0013164236598079145947},
        {0, 15.25, 0.5, -0.06409944114037549554},
        {2, 15.25, 0.5, 0.004002966010624166103},
        {3, 15.25, 0.5, 0.000075763691712401448017},
        {5, 15.25, 0.5, 0.000015765946275929643484},
        {0, 40, 0.5, 0.079221637033513266622},
        {2, 40, 0.5, -0.000016467134075910226862},
        {3, 40, 0.5, -0.0013174687067164853692},
        {5, 40, 0.5, 0.00062728176335435136827},
        {0, 1000, 0.5, 0.015812705916451282535},
        {2, 1000, 0.5, -1.3176152995896216755e-7},
        {3, 1000, 0.5, -0.00026352309128969769652},
        {5, 1000, 0.5, 0.00012548715932631751586},
        {0, 2.5, 2, -0.0050659331517735635276},
        {2, 2.5, 2, 0.0008059339229755990024},
        {3, 2.5, 2, 0.00093318829272279465158},
        {5, 2.5, 2, -0.00039648793776840244109},
        {0, 4.5, 2, -0.00089926648510689686092},
        {2, 4.5, 2, 0.00015229857632293274847},
        {3, 4.5, 2, 0.00033417795119611761111},
        {5, 4.5, 2, -0.00016343833302368186757},
        {0, 6.5, 2, -0.00030097588681629857032},
        {2, 6.5, 2, 0.000051825341395651248009},
        {3, 6.5, 2, 0.00016638187040393043847},
        {5, 6.5, 2, -0.000084500021196598226389},
        {0, 9, 2, 0.0064009035829203140234},
        {2, 9, 2, -0.000022598634423516676336},
        {3, 9, 2, -0.00010110420583860333947},
        {5, 9, 2, 0.000047153637373369273385},
        {0, 15.25, 2, -0.0010799870885639169068},
        {2, 15.25, 2, 0.000067173574066097687769},
        {3, 15.25, 2, -7.7936829199904718076e-7},
        {5, 15.25, 2, 1.816929663854329025e-6},
        {0, 40, 2, 0.0003151038412910281576},
        {2, 40, 2, -2.6026180910323000444e-7},
        {3, 40, 2, -5.2036881139035741371e-6},
        {5, 40, 2, 2.4752851429513767059e-6},
        {0, 1000, 2, 5.0016666663333335714e-7},
        {2, 1000, 2, -1.666665079367579359e-11},
        {3, 1000, 2, -8.3333214285922618517e-9},
        {5, 1000, 2, 3.9682414682918468942e-9},
        {0, 2.5, 3, -0.0029430968404057146003},
        {2, 2.5, 3, 0.00044170728202002717633},
        {3, 2.5, 3, 0.00029833428207446893842},
        {5, 2.5, 3, -0.000097235913858035256766},
        {0, 4.5, 3, -0.00029649190213410966199},
        {2, 4.5, 3, 0.000049165692219951739398},
        {3, 4.5, 3, 0.00006894703866685007882},
        {5, 4.5, 3, -0.000031178637604485497321},
        {0, 6.5, 3, -0.00006908303369960020184},
        {2, 6.5, 3, 0.000011770157928060129196},
        {3, 6.5, 3, 0.000024680685136739591768},
        {5, 6.5, 3, -0.000012066851883130569551},
        {0, 9, 3, 0.00072382009171104744847},
        {2, 9, 3, -3.737683361422841382e-6},
        {3, 9, 3, -0.000011040515829288896102},
        {5, 9, 3, 5.0423871650387982273e-6},
        {0, 15.25, 3, -0.000070954626276364125809},
        {2, 15.25, 3, 4.3956537627951795318e-6},
        {3, 15.25, 3, -1.3985418347119990856e-7},
        {5, 15.25, 3, 1.8557956227899151441e-7},
        {0, 40, 3, 7.9101359176492938782e-6},
        {2, 40, 3, -9.7559502054603541173e-9},
        {3, 40, 3, -1.2997619911518416025e-7},
        {5, 40, 3, 6.1760518966232952609e-8},
        {0, 1000, 3, 5.0024999991666675e-10},
        {2, 1000, 3, -2.4999960317547817188e-14},
        {3, 1000, 3, -8.3333095238720235974e-12},
        {5, 1000, 3, 3.968228968367604027e-12},
    };
    for (const auto& c : cases) {
        const BernoulliAEvaluator a({c.nu, 1.0}, 5);
        const double tol = (c.y > 4.0 && c.y < 7.0) ? 1e-11 : 1e-11 * std::abs(c.value) + 1e-13;
        EXPECT_NEAR(a(c.order, c.y), c.value, tol)
            << "order=" << c.order << " y=" << c.y << " nu=" << c.nu;
    }
}

TEST(BernoulliA, GeneratingFunction)
{
    // e^(beta y) C(y, beta) = A_0(y) + beta A_1(y) + O(beta^2); the first
    // coefficient is extracted with one Richardson step.
    const PowerLawInteraction s{2.0, 1.0};
    const BernoulliAEvaluator a(s, 1);
    for (double y : {1.0, 2.5}) {
        auto slope = [&](double beta) { return (std::exp(beta * y) * c_oracle(s, y, beta) - a(0, y)) / beta; };
        EXPECT_NEAR(std::exp(0.01 * y) * c_oracle(s, y, 0.01), a(0, y), 1e-3);
        EXPECT_NEAR(2.0 * slope(0.005) - slope(0.01), a(1, y), 1e-6) << "y=" << y;
    }
}

TEST(BernoulliA, COracle)
{
    // nu = 0: closed form e^(-beta y) (e^(beta t)/(e^beta - 1) - 1/beta), t = 1 + y - ceil y.
    EXPECT_NEAR(c_oracle({0.0, 1.0}, 0.5, 1.0), std::exp(-0.5) * (std::exp(0.5) / (std::exp(1.0) - 1.0) - 1.0),
                1e-12);
    EXPECT_NEAR(c_oracle({0.0, 1.0}, 0.5, 1.0), -0.0245539528433070, 1e-12);
    EXPECT_NEAR(c_oracle({2.0, 1.0}, 1e6, 1.0), 0.0, 1e-15);
    EXPECT_THROW(c_oracle({2.0, 1.0}, 1.0, 0.0), DomainError);
    EXPECT_THROW(c_oracle({2.0, 1.0}, 1.0, 1e-9, 1000), ConvergenceError);
}

TEST(BernoulliA, PeriodizedBernoulli)
{
    EXPECT_DOUBLE_EQ(periodized_bernoulli(0, 2.0), 0.5);
    EXPECT_NEAR(periodized_bernoulli(0, 2.5), 0.0, 1e-16);
    EXPECT_NEAR(periodized_bernoulli(1, 0.25), -1.0 / 96.0, 1e-16);
    EXPECT_THROW(periodized_bernoulli(0, 0.0), DomainError);
}

TEST(BernoulliA, Errors)
{
    const BernoulliAEvaluator a({2.0, 1.0}, 2);
    EXPECT_THROW(a(0, 0.0), DomainError);
    EXPECT_THROW(a(0, -1.0), DomainError);
    EXPECT_THROW(a(3, 1.0), CapacityError);
    EXPECT_THROW(BernoulliAEvaluator({2.0, 0.0}, 1), DomainError);
    EXPECT_THROW(BernoulliAEvaluator({2.0, 1.0}, -1), UsageError);
}

TEST(BernoulliA, NearIntegerExponentWarns)
{
    EXPECT_FALSE(BernoulliAEvaluator({2.0 + 1e-8, 1.0}, 2).warnings().empty());
    EXPECT_TRUE(BernoulliAEvaluator({2.0, 1.0}, 2).warnings().empty());
    EXPECT_TRUE(BernoulliAEvaluator({2.5, 1.0}, 2).warnings().empty());
    // The removable singularity only enters from order nu - 1 on.
    EXPECT_TRUE(BernoulliAEvaluator({3.0 + 1e-8, 1.0}, 1).warnings().empty());
}

TEST(BernoulliA, IntegerExponentBranchIsTheLimit)
{
    // Integer nu uses gamma - H + log y for the k = nu - 1 term.
    const BernoulliAEvaluator exact({2.0, 1.0}, 2);
    for (double shift : {-1e-7, 1e-7}) {
        const BernoulliAEvaluator near({2.0 + shift, 1.0}, 2);
        for (double y : {0.5, 1.0, 2.5, 3.7})
            for (int l = 0; l <= 2; ++l)
                EXPECT_NEAR(near(l, y), exact(l, y), 1e-5 * std::abs(exact(l, y)) + 1e-12);
    }
}

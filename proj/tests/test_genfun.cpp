#include <gtest/gtest.h>

#include "oracles.hpp"
#include "partition_gf/counting.hpp"
#include "partition_gf/genfun.hpp"

using namespace partition_gf;

TEST(DistanceSpec, DerivedQuantities)
{
    const DistanceSpec s({2, 1, 2});
    EXPECT_EQ(s.k(), 3);
    EXPECT_EQ(s.t(), 5);
    EXPECT_EQ(s.T(), 10); // 3*2 + 2*1 + 1*2
    EXPECT_EQ(DistanceSpec({2, 2}).T(), 6);
    EXPECT_EQ(DistanceSpec::single(7).T(), 7);
    EXPECT_EQ(DistanceSpec({1, 1}).minimal_weight(), 6); // 1 + 2 + 3
    EXPECT_THROW(DistanceSpec({2, 0}), invalid_distance);
    EXPECT_THROW(DistanceSpec({}), invalid_distance);
    EXPECT_THROW(DistanceSpec({-1}), invalid_distance);
}

TEST(DistanceSpec, TIsAtLeastTWithEqualityOnlyForOneDistance)
{
    for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 4; ++b) {
            const DistanceSpec two({a, b});
            EXPECT_GT(two.T(), two.t());
            EXPECT_GE(two.t(), two.k());
            EXPECT_EQ(DistanceSpec::single(a).T(), a);
        }
}

TEST(DirectSeriesFixedDiff, T1IsNonDivisors)
{
    const auto s = direct_series_fixed_diff(1, 6);
    EXPECT_EQ(s[3], 1);
    EXPECT_EQ(s[4], 1);
    EXPECT_EQ(s[5], 3);
    EXPECT_EQ(s[6], 2);
    for (long long n = 1; n <= 6; ++n)
        EXPECT_EQ(s[static_cast<std::size_t>(n)], n - divisor_count(n));
}

TEST(DirectSeriesFixedDiff, T2AndLowOrder)
{
    const auto s = direct_series_fixed_diff(2, 8);
    const std::vector<long long> expected{0, 0, 0, 0, 1, 1, 3, 3, 6};
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(s[n], expected[n]);

    const auto t5 = direct_series_fixed_diff(5, 7);
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(t5[n], 0);
    EXPECT_EQ(t5[7], 1); // 1 + 6

    EXPECT_THROW(direct_series_fixed_diff(0, 5), invalid_difference);
}

TEST(DirectSeriesFixedDiff, MatchesBruteForce)
{
    for (long long t = 1; t <= 6; ++t) {
        const auto s = direct_series_fixed_diff(t, 30);
        for (long long n = 1; n <= 30; ++n)
            EXPECT_EQ(s[static_cast<std::size_t>(n)], oracle::fixed_diff(n, t)) << "n=" << n << " t=" << t;
    }
}

TEST(ClosedFormFixedDiff, P2MatchesDisplayedForm)
{
    const FactoredRational p2 = closed_form_fixed_diff(2);
    const FactoredRational display(IntPolynomial::monomial(4), {{1, 1}, {2, 2}});
    EXPECT_EQ(expand_factored(p2, 100), expand_factored(display, 100));
    const auto s = expand_factored(p2, 8);
    EXPECT_EQ(s[4], 1);
    EXPECT_EQ(s[5], 1);
    EXPECT_EQ(s[6], 3);
    EXPECT_EQ(s[7], 3);
    EXPECT_EQ(s[8], 6);
}

TEST(ClosedFormFixedDiff, P3MatchesDisplayedForm)
{
    const FactoredRational display(IntPolynomial{0, 0, 0, 0, 0, 1, 1, 1, -1}, {{2, 2}, {3, 2}});
    EXPECT_EQ(expand_factored(closed_form_fixed_diff(3), 40), expand_factored(display, 40));
}

TEST(ClosedFormFixedDiff, AgreesWithDirectSumAndPochhammerForm)
{
    for (long long t = 2; t <= 8; ++t) {
        SCOPED_TRACE(t);
        const auto closed = expand_factored(closed_form_fixed_diff(t), 200);
        EXPECT_EQ(closed, direct_series_fixed_diff(t, 200));
        EXPECT_EQ(closed, expand_factored(closed_form_fixed_diff_pochhammer(t), 200));
    }
}

TEST(ClosedFormFixedDiff, QBinomialIntermediateForm)
{
    // q^{t-1}(1-q) / ((1-q^t)(1-q^{t-1})(q)_t) * sum_{j=2}^{t} [t j](-1)^j q^{C(j+1,2)}
    for (long long t = 2; t <= 7; ++t) {
        std::vector<std::pair<long long, long long>> factors{{t, 1}, {t - 1, 1}};
        for (long long j = 1; j <= t; ++j)
            factors.emplace_back(j, 1);
        const FactoredRational middle(IntPolynomial::monomial(static_cast<std::size_t>(t - 1)) *
                                          IntPolynomial::one_minus_q_pow(1) * qbinomial_alternating_sum(t, 2),
                                      factors);
        EXPECT_EQ(expand_factored(middle, 120), direct_series_fixed_diff(t, 120)) << t;
    }
}

TEST(ClosedFormFixedDiff, RejectsNonRationalCases)
{
    EXPECT_THROW(closed_form_fixed_diff(1), out_of_range);
    EXPECT_THROW(closed_form_fixed_diff(0), out_of_range);
}

TEST(P1Identity, HoldsAtSeveralOrders)
{
    EXPECT_TRUE(p1_identity_check(1));
    EXPECT_TRUE(p1_identity_check(10));
    EXPECT_TRUE(p1_identity_check(50));
}

TEST(DirectSeriesSpecified, WorkedExample22)
{
    const auto s = direct_series_specified(DistanceSpec({2, 2}), 13);
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(s[n], 0);
    // brute force and the 1/6912 table both give 5 at q^13
    const std::vector<long long> expected{1, 1, 2, 4, 5};
    for (std::size_t i = 0; i < expected.size(); ++i)
        EXPECT_EQ(s[9 + i], expected[i]) << 9 + i;
}

TEST(DirectSeriesSpecified, SingleDistanceIsFixedDifference)
{
    for (long long t = 1; t <= 6; ++t)
        EXPECT_EQ(direct_series_specified(DistanceSpec::single(t), 60), direct_series_fixed_diff(t, 60));
}

TEST(DirectSeriesSpecified, LowOrderVanishing)
{
    EXPECT_EQ(direct_series_specified(DistanceSpec({1, 1}), 5), TruncatedSeries(5));
    for (const auto& d : std::vector<std::vector<long long>>{{1, 1}, {2, 3}, {1, 2, 1}, {4, 1, 3}}) {
        const DistanceSpec spec(d);
        const auto s = direct_series_specified(spec, 60);
        for (long long n = 0; n < spec.minimal_weight(); ++n)
            EXPECT_EQ(s[static_cast<std::size_t>(n)], 0);
        EXPECT_EQ(s[static_cast<std::size_t>(spec.minimal_weight())], 1);
    }
}

TEST(DirectSeriesSpecified, MatchesBruteForce)
{
    for (const auto& d : std::vector<std::vector<long long>>{{2, 2}, {1, 1}, {2, 1, 2}, {1, 3}, {3, 1}}) {
        const auto s = direct_series_specified(DistanceSpec(d), 30);
        for (long long n = 1; n <= 30; ++n)
            EXPECT_EQ(s[static_cast<std::size_t>(n)], oracle::specified(n, d)) << "n=" << n;
    }
}

TEST(ClosedFormSpecified, P22IsTheDisplayedForm)
{
    const FactoredRational p22 = closed_form_specified(DistanceSpec({2, 2}));
    EXPECT_EQ(p22.numerator(), (IntPolynomial::monomial(9) * IntPolynomial{1, 1, 1, 1, -1}));
    EXPECT_EQ(p22.denominator(), (FactoredRational::Denominator{{2, 1}, {3, 2}, {4, 2}}));
}

TEST(ClosedFormSpecified, KEqualsOneReducesToFixedDifference)
{
    for (long long t = 2; t <= 8; ++t)
        EXPECT_EQ(expand_factored(closed_form_specified(DistanceSpec::single(t)), 100),
                  expand_factored(closed_form_fixed_diff(t), 100))
            << t;
}

TEST(ClosedFormSpecified, AgreesWithDirectSum)
{
    EXPECT_EQ(expand_factored(closed_form_specified(DistanceSpec({2, 1, 2})), 40),
              direct_series_specified(DistanceSpec({2, 1, 2}), 40));
    for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 4; ++b) {
            const DistanceSpec spec({a, b});
            if (spec.t() <= spec.k())
                continue;
            EXPECT_EQ(expand_factored(closed_form_specified(spec), 120), direct_series_specified(spec, 120)) << spec;
        }
}

TEST(ClosedFormSpecified, Errors)
{
    EXPECT_THROW(closed_form_specified(DistanceSpec({1, 1})), out_of_range);
    EXPECT_THROW(closed_form_specified(DistanceSpec({1, 1, 1})), out_of_range);
    EXPECT_THROW(closed_form_specified(DistanceSpec::single(1)), out_of_range);
}

TEST(QBinomialAlternatingSum, Examples)
{
    EXPECT_EQ(qbinomial_alternating_sum(3, 0), pochhammer_q(3));
    EXPECT_EQ(qbinomial_alternating_sum(3, 2), (pochhammer_q(3) - IntPolynomial{1} + IntPolynomial{0, 1, 1, 1}));
    EXPECT_EQ(qbinomial_alternating_sum(0, 0), IntPolynomial{1});
    EXPECT_TRUE(qbinomial_alternating_sum(4, 5).is_zero());
    for (long long t = 0; t <= 10; ++t)
        EXPECT_EQ(qbinomial_alternating_sum(t, 0), pochhammer_q(static_cast<std::size_t>(t))) << t;
}

TEST(HeineCheck, ProofSpecializations)
{
    EXPECT_TRUE(heine_check(1, 1, 3 + 2, 2, 40, heine_cutoff(2, 40)));
    EXPECT_TRUE(heine_check(1, 1, 5 + 2, 2 + 1, 40, heine_cutoff(3, 40)));
    for (long long t = 2; t <= 6; ++t)
        for (long long k = 1; k < t; ++k)
            EXPECT_TRUE(heine_check(1, 1, t + 2, k + 1, 60, heine_cutoff(k + 1, 60))) << t << "," << k;
}

TEST(HeineCheck, OtherMonomialArguments)
{
    EXPECT_TRUE(heine_check(2, 1, 4, 1, 30, 30));
    EXPECT_TRUE(heine_check(3, 2, 9, 2, 30, 15));
    EXPECT_TRUE(heine_check(1, 3, 5, 4, 30, 8));
}

TEST(HeineCheck, LargeZOnlyConstantTerm)
{
    EXPECT_TRUE(heine_check(1, 1, 5, 50, 20, 0));
}

TEST(HeineCheck, Errors)
{
    EXPECT_THROW(heine_check(1, 1, 5, 2, 40, 19), cutoff_too_small);
    EXPECT_THROW(heine_check(1, 1, 5, 0, 40, 40), invalid_exponent);
    EXPECT_THROW(heine_check(1, 3, 3, 1, 10, 10), invalid_exponent);
}

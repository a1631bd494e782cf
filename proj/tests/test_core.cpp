#include "oracles.hpp"

#include "ksigma/core.hpp"
#include "ksigma/errors.hpp"

#include <gtest/gtest.h>

using ksigma::FiniteSigma;
using ksigma::Rational;
using ksigma::RatioValue;

namespace {

std::vector<Rational> coeffs(std::initializer_list<long> ks)
{
    std::vector<Rational> out;
    for (long k : ks) {
        out.emplace_back(k);
    }
    return out;
}

}  // namespace

TEST(FiniteSigma, SortsAndRejectsBadInput)
{
    const FiniteSigma s = FiniteSigma::parse("5,0,3,2");
    EXPECT_EQ(s.str(), "0,2,3,5");
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
    EXPECT_THROW((void)FiniteSigma::parse("1,1"), ksigma::InvalidArgument);
    EXPECT_THROW((void)FiniteSigma::parse("7"), ksigma::InvalidArgument);
    EXPECT_THROW((void)FiniteSigma::parse("1,,2"), ksigma::InvalidArgument);
    EXPECT_TRUE(FiniteSigma::parse("1/2,3/4").contains(Rational(3, 4)));
}

TEST(RatioValue, EnclosureBoundsAndComparisons)
{
    EXPECT_THROW((void)RatioValue::exact(1), ksigma::InvalidArgument);
    EXPECT_THROW((void)RatioValue::exact(0), ksigma::InvalidArgument);
    EXPECT_THROW((void)RatioValue::enclosure(Rational(1, 2), Rational(1, 3)), ksigma::InvalidArgument);
    const RatioValue q = RatioValue::enclosure(Rational(1, 5), Rational(1, 4));
    EXPECT_EQ(ksigma::at_least(q, Rational(1, 5)), ksigma::Tri::True);
    EXPECT_EQ(ksigma::at_least(q, Rational(1, 4)), ksigma::Tri::Unknown);
    EXPECT_EQ(ksigma::at_least(q, Rational(1, 3)), ksigma::Tri::False);
    EXPECT_EQ(ksigma::below(q, Rational(1, 3)), ksigma::Tri::True);
    EXPECT_EQ(ksigma::below(q, Rational(1, 5)), ksigma::Tri::False);
}

TEST(Multigeometric, SubsetSums)
{
    EXPECT_EQ(ksigma::sumset_of_multigeometric(coeffs({3, 2})).str(), "0,2,3,5");
    EXPECT_EQ(ksigma::sumset_of_multigeometric(coeffs({1, 1})).str(), "0,1,2");
    EXPECT_EQ(ksigma::sumset_of_multigeometric(coeffs({4, 3, 2})).str(), "0,2,3,4,5,6,7,9");
    EXPECT_EQ(ksigma::sumset_of_multigeometric(coeffs({6, 5, 4, 3})), oracle::ferens());
    EXPECT_THROW((void)ksigma::sumset_of_multigeometric(std::vector<Rational>{}), ksigma::InvalidArgument);
    EXPECT_THROW((void)ksigma::sumset_of_multigeometric(coeffs({3, 0})), ksigma::InvalidArgument);
    const auto spec = ksigma::MultigeometricSpec::parse("4,3,2;17/100");
    EXPECT_EQ(spec.coefficients.size(), 3U);
    EXPECT_EQ(spec.ratio.value(), Rational(17, 100));
}

TEST(Multigeometric, GnjFamilySize)
{
    for (long m = 1; m <= 6; ++m) {
        std::vector<Rational> c{3};
        for (long k = 0; k < m; ++k) {
            c.emplace_back(2);
        }
        const FiniteSigma s = ksigma::sumset_of_multigeometric(c);
        EXPECT_EQ(s.size(), static_cast<std::size_t>(2 * m + 2));
        EXPECT_EQ(s, oracle::gnj(m));
    }
}

TEST(GapStats, KnownSets)
{
    const auto a = ksigma::gap_stats(FiniteSigma::parse("0,2,3,5"));
    EXPECT_EQ(a.diam, Rational(5));
    EXPECT_EQ(a.delta_min, Rational(1));
    EXPECT_EQ(a.delta_max, Rational(2));
    EXPECT_EQ(a.big_i, Rational(2, 7));
    EXPECT_EQ(a.little_i, Rational(2, 7));
    EXPECT_EQ(a.d, Rational(1, 5));
    EXPECT_TRUE(a.extreme_gap);

    const auto b = ksigma::gap_stats(FiniteSigma::parse("0,2,3,4,5,6,7,9"));
    EXPECT_EQ(b.big_i, Rational(2, 11));
    EXPECT_EQ(b.little_i, Rational(1, 6));
    EXPECT_EQ(b.d, Rational(1, 9));

    const auto c = ksigma::gap_stats(FiniteSigma::parse("0,1"));
    EXPECT_EQ(c.diam, Rational(1));
    EXPECT_EQ(c.delta_min, Rational(1));
    EXPECT_EQ(c.delta_max, Rational(1));
    EXPECT_EQ(c.big_i, Rational(1, 2));
    EXPECT_EQ(c.little_i, Rational(1, 2));
    EXPECT_EQ(c.d, Rational(1));
}

TEST(GapStats, GnjClosedForms)
{
    for (long m = 1; m <= 5; ++m) {
        const auto g = ksigma::gap_stats(oracle::gnj(m));
        EXPECT_EQ(g.big_i, Rational(2, 2 * m + 5)) << m;
        EXPECT_EQ(g.little_i, ksigma::min(Rational(1, 2 * m), Rational(2, 2 * m + 5))) << m;
        EXPECT_EQ(g.d, Rational(1, 2 * m + 3)) << m;
    }
}

TEST(GapStats, ConsecutiveIntegers)
{
    for (long s = 2; s <= 12; ++s) {
        std::vector<Rational> xs;
        for (long k = 0; k < s; ++k) {
            xs.emplace_back(k);
        }
        const auto g = ksigma::gap_stats(FiniteSigma(xs));
        EXPECT_EQ(g.big_i, Rational(1, s));
        EXPECT_EQ(g.little_i, Rational(1, s));
    }
}

TEST(GapStats, InteriorLargestGapIsNotExtreme)
{
    EXPECT_FALSE(ksigma::gap_stats(FiniteSigma::parse("0,1,4,5")).extreme_gap);
    EXPECT_TRUE(ksigma::gap_stats(FiniteSigma::parse("0,1,2,5")).extreme_gap);
}

TEST(IBruteforce, Examples)
{
    EXPECT_EQ(ksigma::i_bruteforce(FiniteSigma::parse("0,2,3,5")), Rational(2, 7));
    EXPECT_EQ(ksigma::i_bruteforce(FiniteSigma::parse("0,1,2")), Rational(1, 3));
    EXPECT_EQ(ksigma::i_bruteforce(FiniteSigma::parse("0,2,3,4,5,6,7,9")), Rational(1, 6));
    std::vector<Rational> big;
    for (long k = 0; k < 21; ++k) {
        big.emplace_back(k * k);
    }
    EXPECT_THROW((void)ksigma::i_bruteforce(FiniteSigma(big)), ksigma::InvalidArgument);
}

TEST(GapStatsProperty, LittleIMatchesSubsetEnumeration)
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t size = 2 + trial % 11;
        const FiniteSigma s = oracle::random_sigma(rng, size, 40, 1 + trial % 3);
        const auto g = ksigma::gap_stats(s);
        const Rational expected(oracle::little_i_by_subsets(oracle::raw(s)));
        ASSERT_EQ(g.little_i, expected) << s.str();
        ASSERT_EQ(g.little_i, ksigma::i_bruteforce(s)) << s.str();
    }
}

TEST(GapStatsProperty, ShiftAndScaleInvariance)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const FiniteSigma s = oracle::random_sigma(rng, 2 + trial % 8, 30);
        const Rational shift(trial - 50, 7);
        const Rational scale(trial + 1, 3);
        std::vector<Rational> shifted;
        std::vector<Rational> scaled;
        for (const Rational& x : s) {
            shifted.push_back(x + shift);
            scaled.push_back(x * scale);
        }
        const auto g = ksigma::gap_stats(s);
        EXPECT_EQ(ksigma::gap_stats(FiniteSigma(shifted)), g);
        const auto h = ksigma::gap_stats(FiniteSigma(scaled));
        EXPECT_EQ(h.diam, g.diam * scale);
        EXPECT_EQ(h.delta_min, g.delta_min * scale);
        EXPECT_EQ(h.delta_max, g.delta_max * scale);
        EXPECT_EQ(h.big_i, g.big_i);
        EXPECT_EQ(h.little_i, g.little_i);
        EXPECT_EQ(h.d, g.d);
    }
}

TEST(GapStatsProperty, OrderingInvariants)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = ksigma::gap_stats(oracle::random_sigma(rng, 2 + trial % 10, 25));
        EXPECT_GT(g.delta_min, Rational(0));
        EXPECT_LE(g.delta_min, g.delta_max);
        EXPECT_LE(g.delta_max, g.diam);
        EXPECT_GT(g.big_i, Rational(0));
        EXPECT_LT(g.big_i, Rational(1));
        EXPECT_GT(g.little_i, Rational(0));
        EXPECT_LE(g.little_i, g.big_i);
        EXPECT_GT(g.d, Rational(0));
        EXPECT_LE(g.d, Rational(1));
    }
}

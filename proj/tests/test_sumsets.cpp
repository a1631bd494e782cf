#include "oracles.hpp"

#include "ksigma/errors.hpp"
#include "ksigma/sumsets.hpp"

#include <gtest/gtest.h>

using ksigma::FiniteSigma;
using ksigma::Rational;

TEST(SigmaN, SmallExamples)
{
    const FiniteSigma s = ksigma::sigma_n(FiniteSigma::parse("0,1"), Rational(1, 3), 2);
    EXPECT_EQ(s.str(), "0,1/3,1,4/3");
}

TEST(SigmaN, FerensCardinalities)
{
    const auto r3 = ksigma::sumset_report(oracle::ferens(), Rational(1, 14), 3);
    EXPECT_EQ(r3.cardinality, 2655U);
    EXPECT_EQ(r3.bound, Rational(2655, 2744));
    const auto r2 = ksigma::sumset_report(oracle::ferens(), Rational(1, 15), 2);
    EXPECT_EQ(r2.cardinality, 201U);
    EXPECT_LT(r2.cardinality, 225U);
    ASSERT_TRUE(r2.first_collision.has_value());
    const auto& c = *r2.first_collision;
    EXPECT_NE(c.first, c.second);
    Rational a(0);
    Rational b(0);
    for (std::size_t k = 0; k < c.first.size(); ++k) {
        a += c.first[k] * Rational(1, 15).pow(static_cast<unsigned>(k));
        b += c.second[k] * Rational(1, 15).pow(static_cast<unsigned>(k));
    }
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c.value);
}

TEST(SigmaN, RejectsBadRatio)
{
    EXPECT_THROW((void)ksigma::sigma_n(FiniteSigma::parse("0,1"), Rational(1), 2), ksigma::InvalidArgument);
    EXPECT_THROW((void)ksigma::sigma_n(FiniteSigma::parse("0,1"), Rational(0), 2), ksigma::InvalidArgument);
    EXPECT_THROW((void)ksigma::sigma_n(FiniteSigma::parse("0,1"), Rational(1, 3), 0), ksigma::InvalidArgument);
}

TEST(SigmaN, BudgetReportsDepthReached)
{
    ksigma::SumsetOptions opts;
    opts.max_elements = 1000;
    try {
        (void)ksigma::sigma_n(FiniteSigma::parse("0,1,2,3"), Rational(1, 4), 8, opts);
        FAIL() << "expected BudgetExceeded";
    } catch (const ksigma::BudgetExceeded& e) {
        EXPECT_EQ(e.depth_reached(), 4U);
    }
}

TEST(SigmaNProperty, MatchesNestedEnumeration)
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t size = 2 + trial % 5;
        const unsigned n = 1 + static_cast<unsigned>(trial % 4);
        const FiniteSigma s = oracle::random_sigma(rng, size, 12, 1 + trial % 2);
        const Rational q = oracle::random_ratio(rng, 9);
        const auto expected = oracle::nested_sumset(oracle::raw(s), q.raw(), n);
        const FiniteSigma got = ksigma::sigma_n(s, q, n);
        ASSERT_EQ(got.size(), expected.size()) << s.str() << " q=" << q.str() << " n=" << n;
        std::size_t k = 0;
        for (const mpq_class& x : expected) {
            ASSERT_EQ(got[k++], Rational(x));
        }
    }
}

TEST(SigmaNProperty, CardinalityBounds)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const FiniteSigma s = oracle::random_sigma(rng, 2 + trial % 5, 10);
        const Rational q = oracle::random_ratio(rng, 7);
        ksigma::SumsetEngine engine(s, q);
        EXPECT_EQ(engine.depth(), 1U);
        EXPECT_EQ(engine.cardinality(), s.size());
        std::uint64_t prev = engine.cardinality();
        std::uint64_t power = s.size();
        for (unsigned n = 2; n <= 5; ++n) {
            engine.advance();
            power *= s.size();
            EXPECT_LE(engine.cardinality(), s.size() * prev);
            EXPECT_LE(engine.cardinality(), power);
            prev = engine.cardinality();
        }
    }
}

TEST(SigmaNProperty, Deterministic)
{
    const auto a = ksigma::sumset_report(oracle::gnj(2), Rational(2, 9), 5);
    const auto b = ksigma::sumset_report(oracle::gnj(2), Rational(2, 9), 5);
    EXPECT_EQ(a.cardinality, b.cardinality);
    EXPECT_EQ(a.bound, b.bound);
}

TEST(NullCertificate, Examples)
{
    const auto f = ksigma::null_certificate(oracle::ferens(), Rational(1, 14), 6);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->depth, 3U);
    EXPECT_EQ(f->cardinality, 2655U);
    EXPECT_EQ(f->bound, Rational(2655, 2744));

    const auto c = ksigma::null_certificate(FiniteSigma::parse("0,1"), Rational(2, 5), 4);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->depth, 1U);
    EXPECT_EQ(c->bound, Rational(4, 5));

    EXPECT_FALSE(ksigma::null_certificate(FiniteSigma::parse("0,2,3,5"), Rational(1, 4), 10));
}

TEST(Cover, Examples)
{
    const auto tight = ksigma::cover_length(FiniteSigma::parse("0,1"), Rational(1, 2), 5);
    EXPECT_EQ(tight.total_length, Rational(2));
    EXPECT_EQ(tight.component_count, 1U);

    const auto cantor = ksigma::cover_length(FiniteSigma::parse("0,1"), Rational(1, 3), 3, {}, true);
    EXPECT_EQ(cantor.total_length, Rational(4, 9));
    EXPECT_EQ(cantor.cover_intervals, 8U);
    EXPECT_EQ(cantor.component_count, 8U);
    EXPECT_EQ(cantor.components.front().lo, Rational(0));
    EXPECT_EQ(cantor.components.back().hi, Rational(3, 2));

    const Rational q(1, 14);
    const Rational diam_k = Rational(18) / (Rational(1) - q);
    EXPECT_EQ(ksigma::cover_length(oracle::ferens(), q, 1).total_length, Rational(210, 13));
    EXPECT_EQ(ksigma::cover_length(oracle::ferens(), q, 2).total_length, Rational(1359, 91));
    const auto f3 = ksigma::cover_length(oracle::ferens(), q, 3);
    EXPECT_EQ(f3.total_length, Rational(17865, 1274));
    EXPECT_EQ(f3.diam_k, diam_k);
    EXPECT_LT(f3.total_length, diam_k);
}

TEST(CoverProperty, MatchesDirectUnion)
{
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const FiniteSigma s = oracle::random_sigma(rng, 2 + trial % 4, 9, 1 + trial % 3);
        const Rational q = oracle::random_ratio(rng, 8);
        const unsigned n = 1 + static_cast<unsigned>(trial % 3);
        const auto pts = oracle::nested_sumset(oracle::raw(s), q.raw(), n);
        mpq_class qn = 1;
        for (unsigned k = 0; k < n; ++k) {
            qn *= q.raw();
        }
        const mpq_class len = qn * (s.back() - s.front()).raw() / (1 - q.raw());
        const auto r = ksigma::cover_length(s, q, n);
        ASSERT_EQ(r.total_length, Rational(oracle::union_length({pts.begin(), pts.end()}, len)))
            << s.str() << " q=" << q.str() << " n=" << n;
    }
}

TEST(CoverProperty, MonotoneInDepth)
{
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteSigma s = oracle::random_sigma(rng, 2 + trial % 5, 15);
        const Rational q = oracle::random_ratio(rng, 11);
        Rational prev = (s.back() - s.front()) / (Rational(1) - q);
        for (unsigned n = 1; n <= 4; ++n) {
            const Rational len = ksigma::cover_length(s, q, n).total_length;
            ASSERT_LE(len, prev) << s.str() << " q=" << q.str() << " n=" << n;
            prev = len;
        }
    }
}

TEST(CoverProperty, TightAboveIntervalThreshold)
{
    std::mt19937_64 rng(1618);
    int checked = 0;
    for (int trial = 0; checked < 40 && trial < 400; ++trial) {
        const FiniteSigma s = oracle::random_sigma(rng, 2 + trial % 5, 12);
        const Rational q = oracle::random_ratio(rng, 12);
        if (q < ksigma::gap_stats(s).big_i) {
            continue;
        }
        ++checked;
        const Rational full = (s.back() - s.front()) / (Rational(1) - q);
        for (unsigned n = 1; n <= 4; ++n) {
            ASSERT_EQ(ksigma::cover_length(s, q, n).total_length, full) << s.str() << " q=" << q.str();
        }
    }
    EXPECT_EQ(checked, 40);
}

TEST(CoverProperty, NullCertificateDrivesCoverToZero)
{
    const FiniteSigma s = FiniteSigma::parse("0,1");
    const Rational q(2, 5);
    Rational prev = ksigma::cover_length(s, q, 1).total_length;
    for (unsigned m = 2; m <= 5; ++m) {
        const Rational len = ksigma::cover_length(s, q, m).total_length;
        EXPECT_EQ(len, prev * Rational(4, 5));
        prev = len;
    }
}

TEST(T12, Examples)
{
    const auto base4 = ksigma::t12_check(FiniteSigma::parse("0,1,2,3"), Rational(1, 4), 8);
    EXPECT_FALSE(base4.zero_measure);
    EXPECT_EQ(base4.checked_depth, 8U);
    std::uint64_t p = 1;
    for (std::uint64_t c : base4.cardinalities) {
        p *= 4;
        EXPECT_EQ(c, p);
    }

    const auto gnj = ksigma::t12_check(FiniteSigma::parse("0,2,3,5"), Rational(1, 4), 10);
    EXPECT_FALSE(gnj.zero_measure);
    EXPECT_EQ(gnj.checked_depth, 10U);

    const auto f = ksigma::t12_check(oracle::ferens(), Rational(1, 15), 10);
    ASSERT_TRUE(f.zero_measure);
    EXPECT_EQ(f.zero_measure->depth, 2U);
    EXPECT_EQ(f.zero_measure->bound, Rational(201, 225));
}

TEST(T12, Preconditions)
{
    EXPECT_THROW((void)ksigma::t12_check(FiniteSigma::parse("0,1/2"), Rational(1, 2), 3), ksigma::InvalidArgument);
    EXPECT_THROW((void)ksigma::t12_check(FiniteSigma::parse("0,1"), Rational(2, 5), 3), ksigma::InvalidArgument);
}

TEST(FullSumset, Examples)
{
    const auto base3 = ksigma::full_sumset_check(FiniteSigma::parse("0,1,2"), 8);
    EXPECT_FALSE(base3.collision);
    EXPECT_EQ(base3.checked_depth, 8U);

    const auto gnj = ksigma::full_sumset_check(FiniteSigma::parse("0,2,3,5"), 10);
    EXPECT_FALSE(gnj.collision);
    EXPECT_EQ(gnj.checked_depth, 10U);

    const auto f = ksigma::full_sumset_check(oracle::ferens(), 4);
    ASSERT_TRUE(f.collision);
    EXPECT_EQ(f.collision_depth, 2U);
    Rational a(0);
    Rational b(0);
    for (std::size_t k = 0; k < 2; ++k) {
        a += f.collision->first[k] * Rational(1, 15).pow(static_cast<unsigned>(k));
        b += f.collision->second[k] * Rational(1, 15).pow(static_cast<unsigned>(k));
    }
    EXPECT_EQ(a, b);
}

#include "ksigma/errors.hpp"
#include "ksigma/rational.hpp"

#include <gtest/gtest.h>

#include <vector>

using ksigma::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals)
{
    EXPECT_EQ(Rational::parse("2655/2744"), Rational(2655, 2744));
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("17"), Rational(17));
    EXPECT_EQ(Rational::parse("0.17"), Rational(17, 100));
    EXPECT_EQ(Rational::parse(" 1/3 "), Rational(1, 3));
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "--1"}) {
        EXPECT_THROW((void)Rational::parse(bad), ksigma::InvalidArgument) << bad;
    }
}

TEST(Rational, CanonicalStrings)
{
    EXPECT_EQ(Rational(4, 8).str(), "1/2");
    EXPECT_EQ(Rational(-10, 5).str(), "-2");
    EXPECT_EQ(Rational(0).str(), "0");
}

TEST(Rational, DecimalRoundsHalfAwayFromZero)
{
    EXPECT_EQ(Rational(1, 3).decimal(5), "0.33333");
    EXPECT_EQ(Rational(2, 3).decimal(5), "0.66667");
    EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
    EXPECT_EQ(Rational(5).decimal(0), "5");
}

TEST(Rational, ArithmeticAndOrdering)
{
    const Rational a(1, 6);
    const Rational b(2, 11);
    EXPECT_LT(a, b);
    EXPECT_EQ(a + b, Rational(23, 66));
    EXPECT_EQ(b - a, Rational(1, 66));
    EXPECT_EQ(a * b, Rational(1, 33));
    EXPECT_EQ(a / b, Rational(11, 12));
    EXPECT_EQ(Rational(1, 14).pow(3), Rational(1, 2744));
    EXPECT_EQ(Rational(-3, 4).reciprocal(), Rational(-4, 3));
    EXPECT_EQ(ksigma::midpoint(Rational(1, 8), Rational(1, 6)), Rational(7, 48));
}

TEST(Rational, DenominatorLcm)
{
    const std::vector<Rational> xs{Rational(1, 4), Rational(5, 6), Rational(2)};
    EXPECT_EQ(ksigma::denominator_lcm(xs), mpz_class(12));
}

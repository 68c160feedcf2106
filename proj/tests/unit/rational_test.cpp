#include <gtest/gtest.h>

#include <random>

#include "mopareto/errors.hpp"
#include "mopareto/rational.hpp"

namespace mopareto {
namespace {

TEST(ParseRational, AcceptsIntegerFractionAndDecimal) {
    EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
    EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_EQ(parse_rational("0.001"), Rational(1, 1000));
}

TEST(ParseRational, RejectsMalformedText) {
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e5", " 1", "1 ", "--1", "0x10", "1/-2", "nan"}) {
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
    }
}

TEST(ParseRational, ZeroOnlyRejectedForObjectiveValues) {
    EXPECT_NO_THROW(parse_rational("0"));
    EXPECT_THROW(parse_positive_rational("0"), ParseError);
    EXPECT_THROW(parse_positive_rational("-1/2"), ParseError);
    EXPECT_EQ(parse_positive_rational("2/4"), Rational(1, 2));
}

TEST(Rational, CanonicalFormAndPrinting) {
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(8, 4).str(), "2");
    EXPECT_TRUE(Rational(8, 4).is_integer());
    EXPECT_EQ(Rational(3, 9).denominator(), 3);
}

TEST(Rational, ArithmeticAndOrder) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_GT(-b, -a);
    EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(PowRatio, IntegerExponents) {
    EXPECT_EQ(pow_ratio(Rational(2), 3), Rational(8));
    EXPECT_EQ(pow_ratio(Rational(3, 2), 2), Rational(9, 4));
    EXPECT_EQ(pow_ratio(Rational(3, 2), -1), Rational(2, 3));
    EXPECT_EQ(pow_ratio(Rational(5, 7), 0), Rational(1));
    EXPECT_THROW(pow_ratio(Rational(0), 2), std::domain_error);
}

TEST(PowRatio, MatchesRepeatedMultiplication) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational base(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9));
        const long e = static_cast<long>(rng() % 12);
        Rational expected(1);
        for (long i = 0; i < e; ++i) expected = expected * base;
        EXPECT_EQ(pow_ratio(base, e), expected);
        EXPECT_EQ(pow_ratio(base, -e), Rational(1) / expected);
    }
}

TEST(BitLengths, EncodingAndCeilLog2) {
    EXPECT_EQ(bit_length(mpz_class(0)), 1U);
    EXPECT_EQ(bit_length(mpz_class(8)), 4U);
    EXPECT_EQ(encoding_length(Rational(5, 32)), 6U);
    EXPECT_EQ(ceil_log2(Rational(1)), 0U);
    EXPECT_EQ(ceil_log2(Rational(8)), 3U);
    EXPECT_EQ(ceil_log2(Rational(9)), 4U);
    EXPECT_EQ(ceil_log2(Rational(1, 4)), 0U);
    EXPECT_THROW(ceil_log2(Rational(0)), std::domain_error);
}

}  // namespace
}  // namespace mopareto

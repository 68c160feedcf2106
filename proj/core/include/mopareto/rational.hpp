#ifndef MOPARETO_RATIONAL_HPP
#define MOPARETO_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace mopareto {

/**
 * Exact arbitrary-precision rational number.
 *
 * Always held in canonical form: the denominator is positive and
 * gcd(|numerator|, denominator) = 1, so equality is structural. Values are
 * never mutated through a shared reference; copies are independent.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    static Rational from_integers(const mpz_class& numerator, const mpz_class& denominator);

    const mpq_class& get() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_positive() const { return sign() > 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }

    /// Canonical rendering: "num" when the denominator is 1, else "num/den".
    std::string str() const;

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

/// Parses "5", "-3/2", or a finite decimal such as "1.25" exactly.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Like parse_rational, but additionally rejects values <= 0.
Rational parse_positive_rational(std::string_view text);

/// base^exponent, exact. Requires base > 0.
Rational pow_ratio(const Rational& base, long exponent);

/// Number of bits in |z| (1 for zero).
std::size_t bit_length(const mpz_class& z);

/// max(bits(numerator), bits(denominator)): the encoding-length convention
/// used for the minimum-gap property of rationals.
std::size_t encoding_length(const Rational& r);

/// Smallest m >= 0 with 2^m >= r, for r > 0.
unsigned ceil_log2(const Rational& r);

}  // namespace mopareto

#endif  // MOPARETO_RATIONAL_HPP

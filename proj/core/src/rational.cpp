#include "mopareto/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "mopareto/errors.hpp"

namespace mopareto {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_digits(std::string_view s) {
    return mpz_class(std::string(s), 10);
}

[[noreturn]] void malformed(std::string_view text) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
}

Rational Rational::from_integers(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    return Rational(mpq_class(numerator, denominator));
}

std::string Rational::str() const {
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.sign() == 0) throw std::domain_error("division by zero");
    value_ /= other.value_;
    return *this;
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpz_class num;
    mpz_class den = 1;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto lhs = body.substr(0, slash);
        const auto rhs = body.substr(slash + 1);
        if (!all_digits(lhs) || !all_digits(rhs)) malformed(text);
        num = parse_digits(lhs);
        den = parse_digits(rhs);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) malformed(text);
        num = parse_digits(std::string(whole) + std::string(frac));
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(body)) malformed(text);
        num = parse_digits(body);
    }
    if (negative) num = -num;
    return Rational::from_integers(num, den);
}

Rational parse_positive_rational(std::string_view text) {
    Rational r = parse_rational(text);
    if (!r.is_positive()) {
        throw ParseError("nonpositive objective value '" + std::string(text) + "'");
    }
    return r;
}

Rational pow_ratio(const Rational& base, long exponent) {
    if (!base.is_positive()) throw std::domain_error("pow_ratio requires a positive base");
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                         : static_cast<unsigned long>(exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), e);
    if (exponent < 0) std::swap(num, den);
    return Rational::from_integers(num, den);
}

std::size_t bit_length(const mpz_class& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t encoding_length(const Rational& r) {
    return std::max(bit_length(r.numerator()), bit_length(r.denominator()));
}

unsigned ceil_log2(const Rational& r) {
    if (!r.is_positive()) throw std::domain_error("ceil_log2 requires a positive value");
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    // 2^m >= num/den  <=>  den << m >= num
    const auto nb = bit_length(num);
    const auto db = bit_length(den);
    unsigned m = nb > db + 1 ? static_cast<unsigned>(nb - db - 1) : 0U;
    mpz_class shifted = den << m;
    while (shifted < num) {
        shifted <<= 1;
        ++m;
    }
    return m;
}

}  // namespace mopareto

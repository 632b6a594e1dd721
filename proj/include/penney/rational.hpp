#pragma once

/*
 * Exact rational numbers over arbitrary-precision integers.
 *
 * A Rational is always stored reduced: gcd(|num|, den) = 1 and den > 0,
 * with zero represented uniquely as 0/1. Equality is therefore structural.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "penney/errors.hpp"

namespace penney {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    Rational(mpz_class num, mpz_class den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "a", "a/b", or a finite decimal "x.yyy" (converted digit by digit).
    static Rational parse(std::string_view text);

    const mpz_class& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return sgn(num_) == 0; }
    int sign() const noexcept { return sgn(num_); }

    /// True when the stored fraction is in lowest terms with positive denominator.
    bool is_canonical() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    /// Fixed-point decimal with exactly `digits` fractional digits, round-half-even.
    std::string to_decimal(int digits) const;

    /// Integer part plus a proper fraction, e.g. "3 1/3" (or "3⅓" when `unicode`).
    std::string to_mixed(bool unicode = false) const;

    double to_double() const;

    /// Largest integer not above the value.
    mpz_class floor() const;

private:
    void normalize();

    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^-k as a Rational.
Rational pow2_inverse(unsigned long k);

}  // namespace penney

#ifndef YANGIAN_RATIONAL_HPP
#define YANGIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "yangian/errors.hpp"

namespace yangian {

/// Arbitrary-precision rational scalar, always kept in lowest terms with a
/// positive denominator. All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);

    /// Parses "p", "p/q", with optional leading minus on either part.
    static Rational parse(const std::string& text);

    /// Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const;
    int sign() const { return sgn(v_); }

    /// The value as a machine integer; errors unless integral and in range.
    long to_long() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

Rational abs(const Rational& r);

/// A construction hit a vanishing linear denominator factor g(x) = 0 (or
/// g~(x) = 0). Carries the argument x at which the factor vanishes so that
/// callers can match observed poles against predicted pole sets.
class PoleError : public Error {
public:
    PoleError(const std::string& context, Rational argument);
    const std::string& context() const { return context_; }
    const Rational& argument() const { return argument_; }

private:
    std::string context_;
    Rational argument_;
};

}  // namespace yangian

#endif  // YANGIAN_RATIONAL_HPP

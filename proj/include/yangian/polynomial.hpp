#ifndef YANGIAN_POLYNOMIAL_HPP
#define YANGIAN_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "yangian/rational.hpp"

namespace yangian {

/// Dense univariate polynomial in the spectral parameter u with Rational
/// coefficients, stored constant term first. Trailing zero coefficients are
/// stripped, so equality is structural; the zero polynomial has an empty
/// coefficient list.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(Rational c);                    // NOLINT(google-explicit-constructor)

    static Poly variable();
    /// c0 + c1*u
    static Poly linear(Rational c0, Rational c1);
    static Poly from_coefficients(std::vector<Rational> coefficients);

    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    /// Coefficient of u^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const;

    Rational eval(const Rational& x) const;
    /// The composed polynomial p(u + s).
    Poly shifted(const Rational& s) const;

    /// Compact canonical text form, e.g. "u^2-2*u-5/4".
    std::string str(const char* var = "u") const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void strip();
    std::vector<Rational> c_;
};

/// True iff the canonical coefficient sequences are identical.
inline bool poly_equal(const Poly& p, const Poly& q) { return p == q; }

}  // namespace yangian

#endif  // YANGIAN_POLYNOMIAL_HPP

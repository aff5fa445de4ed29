#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yangian/gamma.hpp"
#include "yangian/polynomial.hpp"
#include "yangian/rational.hpp"

using yangian::DivisionByZeroError;
using yangian::gamma_ratio;
using yangian::Poly;
using yangian::PoleError;
using yangian::Rational;

TEST_CASE("rational canonicalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));

    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 3).sign() == 1);
    CHECK(Rational(-7, 3).sign() == -1);
    CHECK(Rational().is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-6, 3).to_long() == -2);
}

TEST_CASE("rational parsing and text round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("6/4") == Rational(3, 2));

    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse(Rational(-22, 7).str()) == Rational(-22, 7));
}

TEST_CASE("rational division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("pole error carries context and argument") {
    const PoleError err("somewhere", Rational(-3, 2));
    CHECK(err.context() == "somewhere");
    CHECK(err.argument() == Rational(-3, 2));
}

TEST_CASE("polynomial construction and canonical form") {
    const Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    const Poly u = Poly::variable();
    CHECK(u.degree() == 1);
    CHECK(u.coefficient(0) == Rational(0));
    CHECK(u.coefficient(1) == Rational(1));

    const Poly p = Poly::linear(Rational(-5, 2), Rational(1));
    CHECK(p == u - Poly(Rational(5, 2)));

    // Trailing zero coefficients are stripped.
    const Poly q = Poly::from_coefficients({Rational(3), Rational(0), Rational(0)});
    CHECK(q.degree() == 0);
    CHECK(q == Poly(3));
}

TEST_CASE("polynomial arithmetic") {
    const Poly a = Poly::linear(Rational(-5, 2), Rational(1));  // u - 5/2
    const Poly b = Poly::linear(Rational(1, 2), Rational(1));   // u + 1/2
    const Poly product = a * b;                                 // u^2 - 2u - 5/4
    CHECK(product ==
          Poly::from_coefficients({Rational(-5, 4), Rational(-2), Rational(1)}));
    CHECK(poly_equal(product, product));
    CHECK_FALSE(poly_equal(product, a));

    CHECK(a + b == Poly::from_coefficients({Rational(-2), Rational(2)}));
    CHECK(a - a == Poly());
    CHECK(-a == Poly::linear(Rational(5, 2), Rational(-1)));

    CHECK(product.eval(Rational(5, 2)) == Rational(0));
    CHECK(product.eval(Rational(0)) == Rational(-5, 4));

    // p(u+s): shifting u-5/2 by 3 gives u+1/2.
    CHECK(a.shifted(Rational(3)) == b);
    CHECK(product.shifted(Rational(1, 2)) ==
          Poly::linear(Rational(-2), Rational(1)) * Poly::linear(Rational(1), Rational(1)));

    CHECK(product.str() == "u^2-2*u-5/4");
}

TEST_CASE("gamma ratio at nonnegative offsets") {
    CHECK(gamma_ratio(Rational(3, 2), 0) == Rational(1));
    CHECK(gamma_ratio(Rational(3, 2), 2) == Rational(15, 4));
    CHECK(gamma_ratio(Rational(-2), 3) == Rational(0));  // zero factor -> 0
}

TEST_CASE("gamma ratio at negative offsets") {
    CHECK(gamma_ratio(Rational(3, 2), -1) == Rational(2));
    CHECK(gamma_ratio(Rational(7, 2), -2) == Rational(4, 15));
    CHECK_THROWS_AS(gamma_ratio(Rational(2), -3), DivisionByZeroError);
}

TEST_CASE("gamma ratio functional identities") {
    const std::vector<Rational> zs = {Rational(3, 2), Rational(-5, 3), Rational(7),
                                      Rational(-1, 2)};
    for (const Rational& z : zs) {
        for (long a = 0; a <= 4; ++a) {
            for (long b = 0; b <= 4; ++b) {
                CHECK(gamma_ratio(z, a + b) ==
                      gamma_ratio(z, a) * gamma_ratio(z + Rational(a), b));
            }
        }
        for (long m = -3; m <= 3; ++m) {
            const Rational forward = gamma_ratio(z, m);
            if (forward.is_zero()) {
                continue;
            }
            CHECK(forward * gamma_ratio(z + Rational(m), -m) == Rational(1));
        }
    }
}

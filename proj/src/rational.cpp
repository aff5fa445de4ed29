#include "yangian/rational.hpp"

#include <ostream>

namespace yangian {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(text)};
            return Rational(std::move(v));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (sgn(den) == 0) {
            throw DivisionByZeroError("rational literal '" + text + "' has zero denominator");
        }
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw Error("invalid rational literal '" + text + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_integer() const { return v_.get_den() == 1; }

long Rational::to_long() const {
    if (!is_integer()) {
        throw Error("rational " + str() + " is not an integer");
    }
    if (!v_.get_num().fits_slong_p()) {
        throw Error("integer " + str() + " does not fit a machine long");
    }
    return v_.get_num().get_si();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DivisionByZeroError("division of " + str() + " by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

PoleError::PoleError(const std::string& context, Rational argument)
    : Error(context + "; vanishing linear factor at argument " + argument.str()),
      context_(context),
      argument_(std::move(argument)) {}

}  // namespace yangian

#include "yangian/polynomial.hpp"

#include <ostream>
#include <utility>

namespace yangian {

Poly::Poly(Rational c) {
    if (!c.is_zero()) {
        c_.push_back(std::move(c));
    }
}

Poly Poly::variable() { return linear(Rational(0), Rational(1)); }

Poly Poly::linear(Rational c0, Rational c1) {
    Poly p;
    p.c_ = {std::move(c0), std::move(c1)};
    p.strip();
    return p;
}

Poly Poly::from_coefficients(std::vector<Rational> coefficients) {
    Poly p;
    p.c_ = std::move(coefficients);
    p.strip();
    return p;
}

Rational Poly::coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Poly Poly::shifted(const Rational& s) const {
    const Poly u_plus_s = linear(s, Rational(1));
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * u_plus_s + Poly(c_[i]);
    }
    return acc;
}

std::string Poly::str(const char* var) const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            if (c.sign() < 0) {
                out += "-";
            }
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str() + "*";
            }
            out += var;
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly p;
    p.c_.reserve(c_.size());
    for (const Rational& c : c_) {
        p.c_.push_back(-c);
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    strip();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    Poly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            p.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    p.strip();
    return p;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

void Poly::strip() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

}  // namespace yangian

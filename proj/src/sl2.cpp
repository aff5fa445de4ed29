#include "yangian/sl2.hpp"

#include <utility>

namespace yangian {

namespace {

bool is_admissible_finite_weight(const Rational& lambda) {
    const Rational two_lambda = Rational(2) * lambda;
    return two_lambda.is_integer() && two_lambda.sign() >= 0;
}

}  // namespace

HighestWeight::HighestWeight(Rational lambda_value) : lambda(std::move(lambda_value)) {
    if (!is_admissible_finite_weight(lambda)) {
        throw InvalidWeightError("weight " + lambda.str() +
                                 " is not half a nonnegative integer; a cutoff is required for a "
                                 "truncated Verma module");
    }
}

HighestWeight::HighestWeight(Rational lambda_value, long cutoff_value)
    : lambda(std::move(lambda_value)), cutoff(cutoff_value) {
    if (cutoff_value < 0) {
        throw InvalidWeightError("cutoff must be nonnegative, got " +
                                 std::to_string(cutoff_value));
    }
    if (is_admissible_finite_weight(lambda) && Rational(cutoff_value) < Rational(2) * lambda) {
        throw InvalidWeightError("cutoff " + std::to_string(cutoff_value) +
                                 " is below 2*lambda = " + (Rational(2) * lambda).str());
    }
}

bool HighestWeight::finite_dimensional() const { return is_admissible_finite_weight(lambda); }

long HighestWeight::basis_size() const {
    if (finite_dimensional()) {
        return (Rational(2) * lambda).to_long() + 1;
    }
    return *cutoff + 1;
}

long basis_size(const HighestWeight& hw) { return hw.basis_size(); }

RatMatrix act_generator(Sl2Gen gen, const HighestWeight& hw) {
    const long n = hw.basis_size();
    RatMatrix m(n, n);
    switch (gen) {
        case Sl2Gen::E:
            for (long k = 1; k < n; ++k) {
                m.at(k - 1, k) = hw.e_coeff(k);
            }
            break;
        case Sl2Gen::H:
            for (long k = 0; k < n; ++k) {
                m.at(k, k) = hw.weight(k);
            }
            break;
        case Sl2Gen::F:
            // The transition out of the top basis vector is dropped: for
            // finite-dimensional modules its coefficient vanishes anyway, and
            // truncated Verma modules set F on the top vector to zero.
            for (long k = 0; k + 1 < n; ++k) {
                m.at(k + 1, k) = hw.f_coeff(k);
            }
            break;
    }
    return m;
}

RatMatrix casimir_matrix(const HighestWeight& hw) {
    const RatMatrix e = act_generator(Sl2Gen::E, hw);
    const RatMatrix h = act_generator(Sl2Gen::H, hw);
    const RatMatrix f = act_generator(Sl2Gen::F, hw);
    return h * h + Rational(1, 2) * (e * f + f * e);
}

}  // namespace yangian

#ifndef YANGIAN_SL2_HPP
#define YANGIAN_SL2_HPP

#include <optional>

#include "yangian/matrix.hpp"
#include "yangian/rational.hpp"

namespace yangian {

enum class Sl2Gen { E, H, F };

/// Highest-weight data for an sl2 module in the conventions
///   H|k> = (lambda-k)|k>,  E|k> = k|k-1>,  F|k> = (2*lambda-k)|k+1>.
/// When 2*lambda is a nonnegative integer the module is the irreducible
/// representation of dimension 2*lambda+1. Otherwise a cutoff N is required
/// and the module is the Verma module truncated to the basis |0>..|N| with
/// F|N> := 0.
struct HighestWeight {
    Rational lambda;
    std::optional<long> cutoff;

    explicit HighestWeight(Rational lambda_value);
    HighestWeight(Rational lambda_value, long cutoff_value);

    /// 2*lambda is a nonnegative integer.
    bool finite_dimensional() const;
    /// 2*lambda+1 for finite-dimensional modules, cutoff+1 otherwise.
    long basis_size() const;

    Rational weight(long k) const { return lambda - Rational(k); }
    Rational e_coeff(long k) const { return Rational(k); }
    Rational f_coeff(long k) const { return Rational(2) * lambda - Rational(k); }

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.lambda == b.lambda && a.cutoff == b.cutoff;
    }
};

long basis_size(const HighestWeight& hw);

/// Dense matrix of one sl2 generator in the ordered basis |0>,|1>,...
RatMatrix act_generator(Sl2Gen gen, const HighestWeight& hw);

/// The quadratic Casimir H^2 + (EF+FE)/2. Equals lambda*(lambda+1)*identity
/// except possibly in the last row/column of a truncated Verma module.
RatMatrix casimir_matrix(const HighestWeight& hw);

}  // namespace yangian

#endif  // YANGIAN_SL2_HPP

#ifndef YANGIAN_EVAL_REP_HPP
#define YANGIAN_EVAL_REP_HPP

#include "yangian/polynomial.hpp"
#include "yangian/matrix.hpp"
#include "yangian/sl2.hpp"

namespace yangian {

enum class YGen { A, B, C, D };

const char* ygen_name(YGen gen);

/// Evaluation representation V_lambda(delta) with deformation step eta:
///   A(u)|k> = a_k(u)|k>,   a_k(u) = u - delta + eta*(lambda-k),
///   B(u)|k> = eta*f_k|k+1>,
///   C(u)|k> = eta*e_k|k-1>,
///   D(u)|k> = d_k(u)|k>,   d_k(u) = u - delta - eta*(lambda-k).
struct EvalRep {
    HighestWeight hw;
    Rational delta;
    Rational eta;

    EvalRep(HighestWeight hw_value, Rational delta_value, Rational eta_value);

    long dim() const { return hw.basis_size(); }
    const Rational& lambda() const { return hw.lambda; }

    Poly a_poly(long k) const { return Poly::linear(-delta + eta * hw.weight(k), Rational(1)); }
    Poly d_poly(long k) const { return Poly::linear(-delta - eta * hw.weight(k), Rational(1)); }
    Rational e_coeff(long k) const { return hw.e_coeff(k); }
    Rational f_coeff(long k) const { return hw.f_coeff(k); }

    friend bool operator==(const EvalRep& a, const EvalRep& b) {
        return a.hw == b.hw && a.delta == b.delta && a.eta == b.eta;
    }
};

/// Dense matrix of one generator A(u), B(u), C(u), D(u) on the single-factor
/// basis |0>,...,|dim-1>.
PolyMatrix eval_op(YGen gen, const EvalRep& rep);

/// A(u+eta/2)*D(u-eta/2) - B(u+eta/2)*C(u-eta/2); a scalar matrix equal to
/// [(u-delta)^2 - eta^2/4 - eta^2*lambda*(lambda+1)] * identity.
PolyMatrix qdet_matrix(const EvalRep& rep);

}  // namespace yangian

#endif  // YANGIAN_EVAL_REP_HPP

#include "yangian/eval_rep.hpp"

#include <utility>

namespace yangian {

const char* ygen_name(YGen gen) {
    switch (gen) {
        case YGen::A: return "A";
        case YGen::B: return "B";
        case YGen::C: return "C";
        case YGen::D: return "D";
    }
    return "?";
}

EvalRep::EvalRep(HighestWeight hw_value, Rational delta_value, Rational eta_value)
    : hw(std::move(hw_value)), delta(std::move(delta_value)), eta(std::move(eta_value)) {
    if (eta.is_zero()) {
        throw InvalidWeightError("evaluation representation requires eta != 0");
    }
}

PolyMatrix eval_op(YGen gen, const EvalRep& rep) {
    const long n = rep.dim();
    PolyMatrix m(n, n);
    switch (gen) {
        case YGen::A:
            for (long k = 0; k < n; ++k) {
                m.at(k, k) = rep.a_poly(k);
            }
            break;
        case YGen::B:
            for (long k = 0; k + 1 < n; ++k) {
                m.at(k + 1, k) = Poly(rep.eta * rep.f_coeff(k));
            }
            break;
        case YGen::C:
            for (long k = 1; k < n; ++k) {
                m.at(k - 1, k) = Poly(rep.eta * rep.e_coeff(k));
            }
            break;
        case YGen::D:
            for (long k = 0; k < n; ++k) {
                m.at(k, k) = rep.d_poly(k);
            }
            break;
    }
    return m;
}

PolyMatrix qdet_matrix(const EvalRep& rep) {
    const Rational half_eta = rep.eta / Rational(2);
    const PolyMatrix a = shifted(eval_op(YGen::A, rep), half_eta);
    const PolyMatrix d = shifted(eval_op(YGen::D, rep), -half_eta);
    const PolyMatrix b = shifted(eval_op(YGen::B, rep), half_eta);
    const PolyMatrix c = shifted(eval_op(YGen::C, rep), -half_eta);
    return a * d - b * c;
}

}  // namespace yangian

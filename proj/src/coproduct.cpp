#include "yangian/coproduct.hpp"

#include <utility>

namespace yangian {

namespace {

void require_finite_pair(const EvalRep& rep1, const EvalRep& rep2, const char* what) {
    if (!rep1.hw.finite_dimensional() || !rep2.hw.finite_dimensional()) {
        throw UnsupportedError(std::string(what) +
                               ": full-space operators require finite-dimensional factors; use "
                               "the weight-block interface for truncated Verma modules");
    }
}

void require_block_under_cutoffs(const EvalRep& rep1, const EvalRep& rep2, long m,
                                 const char* what) {
    for (const EvalRep* rep : {&rep1, &rep2}) {
        if (!rep->hw.finite_dimensional() && m > *rep->hw.cutoff) {
            throw CutoffExceededError(std::string(what) + ": weight block " + std::to_string(m) +
                                      " exceeds the Verma cutoff " +
                                      std::to_string(*rep->hw.cutoff));
        }
    }
}

PolyTensorOperator coproduct_on(YGen gen, TensorBasis domain, TensorBasis codomain) {
    const EvalRep& r1 = domain.rep1;
    const EvalRep& r2 = domain.rep2;
    const Rational& eta = r1.eta;
    const Rational eta2 = eta * eta;
    PolyMatrix m(codomain.states.size(), domain.states.size());
    for (std::size_t j = 0; j < domain.states.size(); ++j) {
        const auto [l, k] = domain.states[j];
        const auto put = [&](long lt, long kt, Poly value) {
            const long i = codomain.index_of(lt, kt);
            if (i >= 0) {
                m.at(i, j) = std::move(value);
            }
        };
        switch (gen) {
            case YGen::A:
                put(l, k, r1.a_poly(l) * r2.a_poly(k));
                put(l - 1, k + 1, Poly(eta2 * r1.e_coeff(l) * r2.f_coeff(k)));
                break;
            case YGen::B:
                put(l + 1, k, eta * r1.f_coeff(l) * r2.a_poly(k));
                put(l, k + 1, eta * r2.f_coeff(k) * r1.d_poly(l));
                break;
            case YGen::C:
                put(l, k - 1, eta * r2.e_coeff(k) * r1.a_poly(l));
                put(l - 1, k, eta * r1.e_coeff(l) * r2.d_poly(k));
                break;
            case YGen::D:
                put(l, k, r1.d_poly(l) * r2.d_poly(k));
                put(l + 1, k - 1, Poly(eta2 * r1.f_coeff(l) * r2.e_coeff(k)));
                break;
        }
    }
    return PolyTensorOperator{std::move(domain), std::move(codomain), std::move(m)};
}

}  // namespace

long block_shift(YGen gen) {
    switch (gen) {
        case YGen::B:
            return 1;
        case YGen::C:
            return -1;
        default:
            return 0;
    }
}

PolyTensorOperator coproduct_op(YGen gen, const EvalRep& rep1, const EvalRep& rep2) {
    require_finite_pair(rep1, rep2, "coproduct_op");
    TensorBasis basis = TensorBasis::full(rep1, rep2);
    return coproduct_on(gen, basis, basis);
}

PolyTensorOperator opposite_coproduct_op(YGen gen, const EvalRep& rep1, const EvalRep& rep2) {
    const PolyTensorOperator swapped = coproduct_op(gen, rep2, rep1);
    const TensorBasis basis = TensorBasis::full(rep1, rep2);
    return conjugate_by_flip(swapped, basis, basis);
}

PolyTensorOperator coproduct_block(YGen gen, const EvalRep& rep1, const EvalRep& rep2, long m) {
    require_block_under_cutoffs(rep1, rep2, m, "coproduct_block");
    const long mc = m + block_shift(gen);
    if (mc >= 0) {
        require_block_under_cutoffs(rep1, rep2, mc, "coproduct_block");
    }
    return coproduct_on(gen, TensorBasis::block(rep1, rep2, m),
                        TensorBasis::block(rep1, rep2, mc));
}

}  // namespace yangian

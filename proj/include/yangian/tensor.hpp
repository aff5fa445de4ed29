#ifndef YANGIAN_TENSOR_HPP
#define YANGIAN_TENSOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "yangian/eval_rep.hpp"

namespace yangian {

/// Ordered basis of the tensor product V1 (x) V2, or of one of its weight
/// blocks. States |l,k> = |l> (x) |k> are listed lexicographically in (l,k)
/// for the full space; the weight block V_m lists the states with l+k = m by
/// increasing l.
struct TensorBasis {
    EvalRep rep1, rep2;
    std::vector<std::pair<long, long>> states;

    static TensorBasis full(const EvalRep& rep1, const EvalRep& rep2);
    static TensorBasis block(const EvalRep& rep1, const EvalRep& rep2, long m);

    long dim() const { return static_cast<long>(states.size()); }
    /// Position of |l,k> in the ordering, or -1 when absent.
    long index_of(long l, long k) const;
};

/// The weight block V_m = span{ |l,k> : l+k = m } intersected with the
/// available basis (possibly empty).
TensorBasis weight_block(const EvalRep& rep1, const EvalRep& rep2, long m);

/// A linear map between (blocks of) tensor-product bases with exact entries;
/// entries.at(i, j) is the coefficient of codomain state i in the image of
/// domain state j.
template <class T>
struct TensorOp {
    TensorBasis domain;
    TensorBasis codomain;
    Matrix<T> entries;
};

using TensorOperator = TensorOp<Rational>;
using PolyTensorOperator = TensorOp<Poly>;

/// Conjugates by the tensor flip P: given a map between bases of the swapped
/// pair V2 (x) V1, returns P * map * P as a map between the given bases of
/// V1 (x) V2 (which must consist of the mirrored states).
template <class T>
TensorOp<T> conjugate_by_flip(const TensorOp<T>& swapped_op, const TensorBasis& domain,
                              const TensorBasis& codomain) {
    Matrix<T> entries(codomain.states.size(), domain.states.size());
    for (std::size_t r = 0; r < codomain.states.size(); ++r) {
        const auto [lr, kr] = codomain.states[r];
        const long rs = swapped_op.codomain.index_of(kr, lr);
        if (rs < 0) {
            throw Error("flip conjugation: state mismatch between bases");
        }
        for (std::size_t c = 0; c < domain.states.size(); ++c) {
            const auto [lc, kc] = domain.states[c];
            const long cs = swapped_op.domain.index_of(kc, lc);
            if (cs < 0) {
                throw Error("flip conjugation: state mismatch between bases");
            }
            entries.at(r, c) = swapped_op.entries.at(rs, cs);
        }
    }
    return TensorOp<T>{domain, codomain, std::move(entries)};
}

/// The flip map P: V1 (x) V2 -> V2 (x) V1, |l,k> -> |k,l>, as a matrix from
/// the `from` basis to the `to` basis of the swapped pair. With from == to
/// (self-swapped pair) this is the usual permutation matrix.
RatMatrix flip_matrix(const TensorBasis& from, const TensorBasis& to);

/// Key/value echo of the representation parameters, used in reports and
/// serialized output.
std::vector<std::pair<std::string, std::string>> params_echo(const EvalRep& rep1,
                                                             const EvalRep& rep2);
std::vector<std::pair<std::string, std::string>> params_echo(const EvalRep& rep1,
                                                             const EvalRep& rep2,
                                                             const EvalRep& rep3);

}  // namespace yangian

#endif  // YANGIAN_TENSOR_HPP

#ifndef YANGIAN_COPRODUCT_HPP
#define YANGIAN_COPRODUCT_HPP

#include "yangian/tensor.hpp"

namespace yangian {

/// Change of total weight m effected by the coproduct of a generator:
/// 0 for A and D, +1 for B, -1 for C.
long block_shift(YGen gen);

/// Matrix of the coproduct Delta X(u) on the full basis of V1 (x) V2:
///   Delta A = A(x)A + C(x)B,   Delta B = B(x)A + D(x)B,
///   Delta C = A(x)C + C(x)D,   Delta D = B(x)C + D(x)D.
/// Restricted to finite-dimensional factors; truncated Verma factors are
/// served block-wise by coproduct_block.
PolyTensorOperator coproduct_op(YGen gen, const EvalRep& rep1, const EvalRep& rep2);

/// The opposite coproduct: P * (coproduct with the factors exchanged) * P on
/// the full basis of V1 (x) V2.
PolyTensorOperator opposite_coproduct_op(YGen gen, const EvalRep& rep1, const EvalRep& rep2);

/// Restriction of Delta X(u) to the weight block V_m; the codomain is the
/// block V_{m + block_shift(gen)}. Exact for truncated Verma factors as long
/// as both blocks fit under every cutoff.
PolyTensorOperator coproduct_block(YGen gen, const EvalRep& rep1, const EvalRep& rep2, long m);

}  // namespace yangian

#endif  // YANGIAN_COPRODUCT_HPP

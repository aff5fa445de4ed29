#ifndef YANGIAN_RMATRIX_HPP
#define YANGIAN_RMATRIX_HPP

#include "yangian/twist.hpp"

namespace yangian {

enum class TriangularSide { Plus, Minus };

enum class RMatrixMethod { Gauss, Twist, TwistHat };

const char* r_method_name(RMatrixMethod method);

/// Unitriangular Gauss factor of the R-matrix on the full basis of
/// V1 (x) V2: side plus raises the first tensor index (targets (l-n, k+n)),
/// side minus lowers it (targets (l+n, k-n)). Both are 1 on the diagonal.
TensorOperator triangular_r_factor(const TwistParams& p, TriangularSide side);

/// Diagonal Gauss factor of R (the middle factor R0 normalized by the
/// scalar chi), assembled from Gamma-function quotients.
TensorOperator r0_over_chi(const TwistParams& p);

/// The diagonal twist factors entering the factorization
///   F12 = Q12 * R_minus,   F21^{-1} = R_plus * Q21^{-1}:
/// Q12 acts as 1/q_{lk} on |l,k>, and Q21^{-1} as the swapped-parameter
/// q-value at the exchanged indices.
TensorOperator q12_operator(const TwistParams& p);
TensorOperator q21_inverse_operator(const TwistParams& p);

/// The three Gauss factors with R = r_plus * r0 * r_minus.
struct GaussFactors {
    TensorOperator r_plus;
    TensorOperator r0;
    TensorOperator r_minus;
};

GaussFactors gauss_factors(const TwistParams& p);

/// The rational R-matrix R(delta1 - delta2) on V1 (x) V2, normalized to fix
/// the highest state |0,0>. Methods:
///   gauss:     R_plus * (R0/chi) * R_minus,
///   twist:     F21^{-1} * F12 for the family F,
///   twist_hat: the same product for the family Fhat.
/// All methods agree wherever they are defined.
TensorOperator r_matrix(const TwistParams& p, RMatrixMethod method = RMatrixMethod::Twist);

/// Closed form of R for two 2-dimensional factors (lambda = 1/2):
///   R = (d*1 + eta*P) / (d + eta),   d = delta1 - delta2,
/// with P the tensor flip. Raises PoleError at d = -eta.
TensorOperator fundamental_closed_form(const Rational& delta1, const Rational& delta2,
                                       const Rational& eta);

/// Verifies Deltaop X(u) * R = R * Delta X(u) for X in {A, B, C, D}.
CheckReport check_intertwiner(const TwistParams& p);

/// Verifies the factorization identities tying the twists to the Gauss
/// factors: F21^{-1} * F12 = R+ * (R0/chi) * R- = Fhat21^{-1} * Fhat12,
/// Q21^{-1} * Q12 = R0/chi, F21^{-1} = R+ * Q21^{-1}, F12 = Q12 * R-.
CheckReport check_factorization(const TwistParams& p);

/// Verifies the Yang-Baxter equation R12 R13 R23 = R23 R13 R12 on
/// V1 (x) V2 (x) V3. Identical factors i and j get R_ij = P (the flip),
/// the degenerate limit of the rational R-matrix.
CheckReport check_ybe(const EvalRep& rep1, const EvalRep& rep2, const EvalRep& rep3);

}  // namespace yangian

#endif  // YANGIAN_RMATRIX_HPP

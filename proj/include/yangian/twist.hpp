#ifndef YANGIAN_TWIST_HPP
#define YANGIAN_TWIST_HPP

#include <string>

#include "yangian/coproduct.hpp"
#include "yangian/gamma.hpp"
#include "yangian/report.hpp"
#include "yangian/tensor.hpp"

namespace yangian {

/// Which of the three factorizing-twist families:
///   F      diagonalizes the coproduct of D(u),
///   Ftilde diagonalizes the coproduct of A(u),
///   Fhat   shares F's triangular part with the alternative diagonal part.
enum class Family { F, Ftilde, Fhat };

enum class Direction { Forward, Inverse };

const char* family_name(Family family);
const char* direction_name(Direction direction);

/// Selects one concrete twist matrix; swapped = true builds the object with
/// the tensor factors exchanged (an F21-type matrix), expressed on the
/// original V1 (x) V2 basis via flip conjugation.
struct TwistVariant {
    Family family = Family::F;
    Direction direction = Direction::Inverse;
    bool swapped = false;
};

/// Parameter bundle of a two-factor twist, with the linear forms
///   g(x)  = delta1 - delta2 + eta*(lambda1 - lambda2 + x),
///   g~(x) = delta2 - delta1 + eta*(lambda1 - lambda2 + x).
struct TwistParams {
    EvalRep rep1, rep2;

    TwistParams(EvalRep rep1_value, EvalRep rep2_value);

    TwistParams swapped() const { return TwistParams(rep2, rep1); }
    const Rational& eta() const { return rep1.eta; }
    const Rational& lambda1() const { return rep1.hw.lambda; }
    const Rational& lambda2() const { return rep2.hw.lambda; }

    Rational g(const Rational& x) const;
    Rational g_tilde(const Rational& x) const;
    /// The root of g: g(x) = 0 iff x = g_root().
    Rational g_root() const;
    /// The root of g~.
    Rational g_tilde_root() const;
};

/// Series coefficient of the triangular twist part,
///   M^{k,l}_n       = ((-eta)^n/n!) prod_{j=1}^n f^(1)_{l+j-1} e^(2)_{k-j+1} / g(k-l-j),
///   M~^{k,l}_n      = ((eta)^n/n!)  prod_{j=1}^n e^(1)_{l-j+1} f^(2)_{k+j-1} / g~(k-l+j).
/// n = 0 gives 1. A vanishing g factor raises PoleError.
Rational m_coeff(const TwistParams& p, long k, long l, long n, bool tilde);

/// Diagonal twist part on |l,k> in fully reduced form:
///   family F:      q_{lk}  = prod_{j=1}^{n*} g(k-l-j)   / g(-2*lambda1+j-1),
///   family Ftilde: q~_{lk} = prod_{j=1}^{n~} g~(k-l+j)  / g~(2*lambda2+1-j),
///   family Fhat:   q^_{lk} = prod_{j=1}^{n~} g(2*lambda2+1-j) / g(k-l+j),
/// where n* = min(k, 2*lambda1-l) and n~ = min(l, 2*lambda2-k) for
/// finite-dimensional factors (k resp. l for Verma factors). A vanishing
/// denominator factor raises PoleError; a vanishing numerator gives 0.
Rational q_diag(const TwistParams& p, long l, long k, Family family);

/// The same diagonal part computed through Gamma-function quotients
/// (gamma_ratio); agrees with q_diag wherever both are defined.
Rational gamma_form_q(const TwistParams& p, long l, long k, Family family);

/// Dense twist matrix on the full basis of V1 (x) V2 (finite-dimensional
/// factors only). Inverse-direction columns are the eigenvector bases v_{lk};
/// the forward direction is the exact matrix inverse. Entries are assembled
/// as single reduced fractions so that every PoleError reflects a genuine
/// pole of the matrix.
TensorOperator build_twist(const TwistParams& p, const TwistVariant& v);

/// The same construction restricted to the weight block V_m (square block);
/// supports truncated Verma factors for m up to every cutoff.
TensorOperator build_twist_block(const TwistParams& p, const TwistVariant& v, long m);

/// The exact sandwich  F * Delta X(u) * F^{-1}  on the full basis.
PolyTensorOperator twisted_coproduct(const TwistParams& p, Family family, YGen gen);

/// Block-wise sandwich: maps V_m to V_{m + block_shift(gen)}.
PolyTensorOperator twisted_coproduct_block(const TwistParams& p, Family family, YGen gen, long m);

/// Closed form of the twisted coproduct, assembled directly from
/// single-factor operators and diagonal weight fractions. Combinations
/// (F, A), (Fhat, A) and (Ftilde, D) have no implemented closed form and
/// raise UnsupportedError.
PolyTensorOperator expected_twisted_coproduct(const TwistParams& p, Family family, YGen gen);

/// Verifies that the family-F twist diagonalizes Delta D(u) with eigenvalues
/// d^(1)_l(u) d^(2)_k(u) and that the family-Ftilde twist diagonalizes
/// Delta A(u) with eigenvalues a^(1)_l(u) a^(2)_k(u).
CheckReport check_diagonalization(const TwistParams& p);

/// Verifies, generator by generator, that the twisted coproduct equals the
/// flip-conjugated twisted coproduct of the exchanged parameters.
CheckReport check_cocommutativity(const TwistParams& p, Family family);

/// Block-wise cocommutativity on V_m (supports truncated Verma factors).
CheckReport check_cocommutativity_block(const TwistParams& p, Family family, long m);

/// Records an entrywise equality comparison as one report item; on the first
/// mismatch the report fails with a witness carrying basis-labelled
/// coordinates and both entry values.
void record_entrywise(CheckReport& report, const std::string& item, const PolyMatrix& actual,
                      const PolyMatrix& expected, const TensorBasis& rows, const TensorBasis& cols);
void record_entrywise(CheckReport& report, const std::string& item, const RatMatrix& actual,
                      const RatMatrix& expected, const TensorBasis& rows, const TensorBasis& cols);

}  // namespace yangian

#endif  // YANGIAN_TWIST_HPP

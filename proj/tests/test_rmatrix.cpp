#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "yangian/rmatrix.hpp"

using namespace yangian;

namespace {

EvalRep fundamental(const Rational& delta, const Rational& eta = Rational(1)) {
    return EvalRep(HighestWeight(Rational(1, 2)), delta, eta);
}

TwistParams fundamental_pair(const Rational& delta1 = Rational(2),
                             const Rational& delta2 = Rational(0),
                             const Rational& eta = Rational(1)) {
    return TwistParams(fundamental(delta1, eta), fundamental(delta2, eta));
}

TwistParams mixed_pair() {
    return TwistParams(EvalRep(HighestWeight(Rational(1)), Rational(5), Rational(1)),
                       fundamental(Rational(0)));
}

const std::vector<RMatrixMethod> kMethods = {RMatrixMethod::Gauss, RMatrixMethod::Twist,
                                             RMatrixMethod::TwistHat};

}  // namespace

TEST_CASE("unitriangular factors on the fundamental pair") {
    const TwistParams p = fundamental_pair();
    const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const long i00 = basis.index_of(0, 0);
    const long i01 = basis.index_of(0, 1);
    const long i10 = basis.index_of(1, 0);
    const long i11 = basis.index_of(1, 1);

    const TensorOperator minus = triangular_r_factor(p, TriangularSide::Minus);
    // R_- |0,1> = |0,1> + (1/2)|1,0>, all diagonal entries 1.
    CHECK(minus.entries.at(i01, i01) == Rational(1));
    CHECK(minus.entries.at(i10, i01) == Rational(1, 2));
    CHECK(minus.entries.at(i01, i10) == Rational(0));
    CHECK(minus.entries.at(i00, i00) == Rational(1));
    CHECK(minus.entries.at(i11, i11) == Rational(1));

    const TensorOperator plus = triangular_r_factor(p, TriangularSide::Plus);
    // R_+ |1,0> = |1,0> + (1/2)|0,1>, R_+ |0,0> = |0,0>.
    CHECK(plus.entries.at(i10, i10) == Rational(1));
    CHECK(plus.entries.at(i01, i10) == Rational(1, 2));
    CHECK(plus.entries.at(i10, i01) == Rational(0));
    CHECK(plus.entries.at(i00, i00) == Rational(1));

    const TensorOperator r0 = r0_over_chi(p);
    CHECK(r0.entries.is_diagonal());
    CHECK(r0.entries.at(i00, i00) == Rational(1));
    CHECK(r0.entries.at(i01, i01) == Rational(1, 2));
    CHECK(r0.entries.at(i10, i10) == Rational(2, 3));
    CHECK(r0.entries.at(i11, i11) == Rational(1));
}

TEST_CASE("diagonal factorization pieces") {
    const TwistParams p = fundamental_pair();
    const TensorOperator q12 = q12_operator(p);
    const TensorOperator q21_inv = q21_inverse_operator(p);
    CHECK(q12.entries.is_diagonal());
    CHECK(q21_inv.entries.is_diagonal());

    const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    // Q12 acts by 1/q_{lk}; Q21^{-1} by the swapped-parameter q at (k,l).
    for (long i = 0; i < basis.dim(); ++i) {
        const auto [l, k] = basis.states[i];
        CHECK(q12.entries.at(i, i) * q_diag(p, l, k, Family::F) == Rational(1));
        CHECK(q21_inv.entries.at(i, i) == q_diag(p.swapped(), k, l, Family::F));
    }
    CHECK((q21_inv.entries * q12.entries) == r0_over_chi(p).entries);
}

TEST_CASE("R-matrix on the fundamental pair") {
    const TwistParams p = fundamental_pair();
    const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const long i00 = basis.index_of(0, 0);
    const long i01 = basis.index_of(0, 1);
    const long i10 = basis.index_of(1, 0);
    const long i11 = basis.index_of(1, 1);

    const TensorOperator r = r_matrix(p);
    CHECK(r.entries.at(i00, i00) == Rational(1));
    CHECK(r.entries.at(i11, i11) == Rational(1));
    CHECK(r.entries.at(i01, i01) == Rational(2, 3));
    CHECK(r.entries.at(i10, i01) == Rational(1, 3));
    CHECK(r.entries.at(i01, i10) == Rational(1, 3));
    CHECK(r.entries.at(i10, i10) == Rational(2, 3));

    for (RMatrixMethod method : kMethods) {
        CHECK(r_matrix(p, method).entries == r.entries);
    }
    CHECK(r.entries == fundamental_closed_form(Rational(2), Rational(0), Rational(1)).entries);
}

TEST_CASE("construction methods agree away from lambda = 1/2") {
    const TwistParams p = mixed_pair();
    const TensorOperator r = r_matrix(p, RMatrixMethod::Gauss);
    for (RMatrixMethod method : kMethods) {
        CHECK(r_matrix(p, method).entries == r.entries);
    }
    // R fixes the highest state.
    CHECK(r.entries.at(0, 0) == Rational(1));
}

TEST_CASE("closed form for two-dimensional factors") {
    // Coincident evaluation points give the flip.
    const TensorOperator at_zero = fundamental_closed_form(Rational(3), Rational(3), Rational(2));
    const TensorBasis basis = at_zero.domain;
    CHECK(at_zero.entries == flip_matrix(basis, basis));
    CHECK(fundamental_closed_form(Rational(0), Rational(0), Rational(5)).entries ==
          flip_matrix(basis, basis));

    // d = -eta is the pole of the normalized R-matrix.
    try {
        fundamental_closed_form(Rational(0), Rational(1), Rational(1));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.argument() == Rational(1));  // -d/eta
    }

    // Generic agreement with the constructed R-matrix.
    const std::vector<std::array<long, 3>> samples = {{2, 0, 1}, {5, 2, 1}, {7, 3, 2},
                                                      {0, 2, 1}, {-3, 2, 1}};
    for (const auto& [d1, d2, eta] : samples) {
        const TwistParams p = fundamental_pair(Rational(d1), Rational(d2), Rational(eta));
        CHECK(r_matrix(p).entries ==
              fundamental_closed_form(Rational(d1), Rational(d2), Rational(eta)).entries);
    }
}

TEST_CASE("the construction extends to the singular reducible limit") {
    // At delta1 - delta2 = eta the R-matrix still exists (it degenerates to
    // the projection (1 + P)/2) and every method reproduces it, even though
    // its inverse does not exist there.
    const TwistParams p = fundamental_pair(Rational(1), Rational(0), Rational(1));
    const TensorOperator closed = fundamental_closed_form(Rational(1), Rational(0), Rational(1));
    for (RMatrixMethod method : kMethods) {
        CHECK(r_matrix(p, method).entries == closed.entries);
    }
}

TEST_CASE("poles of the R-matrix construction") {
    // delta1 - delta2 = -eta: the closed form has its genuine pole, and the
    // constructions meet it inside F21^{-1}.
    const TwistParams p = fundamental_pair(Rational(0), Rational(1), Rational(1));
    try {
        r_matrix(p, RMatrixMethod::Twist);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.context().find("r_matrix[twist]") != std::string::npos);
    }

    // Coincident evaluation points break the normalized factorization even
    // though the flip itself is finite.
    CHECK_THROWS_AS(r_matrix(fundamental_pair(Rational(0), Rational(0), Rational(1)),
                             RMatrixMethod::Gauss),
                    PoleError);
}

TEST_CASE("intertwiner reports") {
    CHECK(check_intertwiner(fundamental_pair()).passed);
    CHECK(check_intertwiner(mixed_pair()).passed);

    // At a reducibility point the R-matrix or its inverse does not exist, so
    // the check refuses with a pole error.
    CHECK_THROWS_AS(check_intertwiner(fundamental_pair(Rational(1), Rational(0), Rational(1))),
                    PoleError);
    CHECK_THROWS_AS(check_intertwiner(fundamental_pair(Rational(0), Rational(1), Rational(1))),
                    PoleError);
}

TEST_CASE("factorization reports") {
    for (const TwistParams& p : {fundamental_pair(), mixed_pair()}) {
        const CheckReport report = check_factorization(p);
        CHECK(report.passed);
        CHECK(report.items.size() == 5);
        CHECK_FALSE(report.witness.has_value());
    }
}

TEST_CASE("inverse R-matrix from the swapped parameters") {
    for (const TwistParams& p : {fundamental_pair(), mixed_pair()}) {
        const TensorOperator r12 = r_matrix(p);
        const TensorOperator r21_swapped = r_matrix(p.swapped());
        const TensorOp<Rational> r21 =
            conjugate_by_flip(r21_swapped, r12.domain, r12.domain);
        CHECK((r21.entries * r12.entries).is_identity());
    }
}

TEST_CASE("Yang-Baxter equation") {
    // Three fundamental factors; the (2,3) pair sits at the reducible value
    // (delta2 - delta3)/eta = 1, where the construction degenerates but stays
    // finite, and the identity still holds exactly.
    const CheckReport first = check_ybe(fundamental(Rational(3)), fundamental(Rational(1)),
                                        fundamental(Rational(0)));
    CHECK(first.passed);
    CHECK(first.items.size() == 1);

    // Mixed dimensions.
    const CheckReport second =
        check_ybe(fundamental(Rational(4)), fundamental(Rational(2)),
                  EvalRep(HighestWeight(Rational(1)), Rational(0), Rational(1)));
    CHECK(second.passed);

    // Identical factors: that pair contributes the flip.
    const CheckReport degenerate = check_ybe(fundamental(Rational(3)), fundamental(Rational(0)),
                                             fundamental(Rational(0)));
    CHECK(degenerate.passed);
}

TEST_CASE("pole errors in the Yang-Baxter check name the failing pair") {
    // The (1,2) pair sits at (delta1 - delta2)/eta = -1, where R does not
    // exist at all.
    try {
        check_ybe(fundamental(Rational(0)), fundamental(Rational(1)), fundamental(Rational(5)));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.context().find("(1,2)") != std::string::npos);
    }
}

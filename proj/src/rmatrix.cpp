#include "yangian/rmatrix.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "yangian/spectra.hpp"

namespace yangian {

namespace {

void require_finite_pair(const TwistParams& p, const char* what) {
    if (!p.rep1.hw.finite_dimensional() || !p.rep2.hw.finite_dimensional()) {
        throw UnsupportedError(std::string(what) + ": requires finite-dimensional factors");
    }
}

std::string state_str(long l, long k) {
    return "|" + std::to_string(l) + "," + std::to_string(k) + ">";
}

/// 1/q_{lk} as a single reduced fraction; a vanishing denominator factor is a
/// genuine pole, a vanishing numerator factor gives an exact zero entry.
Rational q12_entry(const TwistParams& p, long l, long k) {
    const std::string ctx = "q12_operator: entry at " + state_str(l, k);
    const Rational two_l1 = Rational(2) * p.lambda1();
    const long limit = std::min(k, std::max(0L, (two_l1).to_long() - l));
    Rational value(1);
    for (long j = 1; j <= limit; ++j) {
        const Rational den_arg(k - l - j);
        const Rational den = p.g(den_arg);
        if (den.is_zero()) {
            throw PoleError(ctx, den_arg);
        }
        value /= den;
    }
    for (long j = 1; j <= limit; ++j) {
        const Rational num = p.g(Rational(j - 1) - two_l1);
        if (num.is_zero()) {
            return Rational(0);
        }
        value *= num;
    }
    return value;
}

long triple_index(long a, long b, long c, long d2, long d3) {
    return (a * d2 + b) * d3 + c;
}

/// The R-matrix of an ordered pair inside check_ybe; identical factors get
/// the flip, the degenerate limit of the rational R-matrix.
RatMatrix pair_r_matrix(const EvalRep& a, const EvalRep& b, const char* label) {
    if (a == b) {
        const TensorBasis basis = TensorBasis::full(a, b);
        return flip_matrix(basis, basis);
    }
    try {
        return r_matrix(TwistParams(a, b), RMatrixMethod::Twist).entries;
    } catch (const PoleError& e) {
        throw PoleError(std::string("check_ybe: pair ") + label + ": " + e.context(),
                        e.argument());
    }
}

}  // namespace

const char* r_method_name(RMatrixMethod method) {
    switch (method) {
        case RMatrixMethod::Gauss: return "gauss";
        case RMatrixMethod::Twist: return "twist";
        case RMatrixMethod::TwistHat: return "twist_hat";
    }
    return "?";
}

TensorOperator triangular_r_factor(const TwistParams& p, TriangularSide side) {
    require_finite_pair(p, "triangular_r_factor");
    TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const bool up = (side == TriangularSide::Plus);
    RatMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        const std::string ctx = std::string("triangular_r_factor[") + (up ? "plus" : "minus") +
                                "]: column " + state_str(l, k);
        Rational lead(1);
        for (long n = 0;; ++n) {
            const long lt = up ? l - n : l + n;
            const long kt = up ? k + n : k - n;
            const long row = basis.index_of(lt, kt);
            if (row < 0) {
                break;
            }
            if (n > 0) {
                const Rational rung = up ? p.rep1.e_coeff(l - n + 1) * p.rep2.f_coeff(k + n - 1)
                                         : p.rep1.f_coeff(l + n - 1) * p.rep2.e_coeff(k - n + 1);
                lead *= p.eta() * rung / Rational(n);
                if (lead.is_zero()) {
                    break;
                }
            }
            Rational value = lead;
            for (long j = 1; j <= n; ++j) {
                const Rational den_arg = up ? Rational(k - l + j) : Rational(k - l - 2 * n + j);
                const Rational den = p.g(den_arg);
                if (den.is_zero()) {
                    throw PoleError(ctx, den_arg);
                }
                value /= den;
            }
            m.at(row, j) = value;
        }
    }
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

TensorOperator r0_over_chi(const TwistParams& p) {
    require_finite_pair(p, "r0_over_chi");
    TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const Rational c = (p.rep1.delta - p.rep2.delta) / p.eta();
    const Rational& l1 = p.lambda1();
    const Rational& l2 = p.lambda2();
    RatMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        const std::string ctx = "r0_over_chi: entry at " + state_str(l, k);
        // The entry is a quotient of Gamma-function ratios; spelled out it is
        // a product of monic linear factors (c + shift). Cancel equal factors
        // first so that a PoleError reflects a genuine pole of the entry.
        std::vector<Rational> num_shifts, den_shifts;
        for (long i = 0; i < l; ++i) {
            num_shifts.push_back(l1 - l2 + Rational(k - l + 1 + i));
        }
        for (long i = 0; i < k; ++i) {
            num_shifts.push_back(-l1 - l2 + Rational(i));
        }
        for (long i = 1; i <= l; ++i) {
            den_shifts.push_back(l1 + l2 + Rational(1 - i));
        }
        for (long i = 0; i < k; ++i) {
            den_shifts.push_back(l1 - l2 - Rational(l - i));
        }
        for (auto it = num_shifts.begin(); it != num_shifts.end();) {
            const auto match = std::find(den_shifts.begin(), den_shifts.end(), *it);
            if (match != den_shifts.end()) {
                den_shifts.erase(match);
                it = num_shifts.erase(it);
            } else {
                ++it;
            }
        }
        Rational value(1);
        for (const Rational& shift : den_shifts) {
            const Rational factor = c + shift;
            if (factor.is_zero()) {
                throw PoleError(ctx, p.g_root());
            }
            value /= factor;
        }
        for (const Rational& shift : num_shifts) {
            value *= c + shift;
        }
        m.at(j, j) = value;
    }
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

TensorOperator q12_operator(const TwistParams& p) {
    require_finite_pair(p, "q12_operator");
    TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    RatMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        m.at(j, j) = q12_entry(p, l, k);
    }
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

TensorOperator q21_inverse_operator(const TwistParams& p) {
    require_finite_pair(p, "q21_inverse_operator");
    TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const TwistParams swapped = p.swapped();
    RatMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        m.at(j, j) = q_diag(swapped, k, l, Family::F);
    }
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

GaussFactors gauss_factors(const TwistParams& p) {
    return GaussFactors{triangular_r_factor(p, TriangularSide::Plus), r0_over_chi(p),
                        triangular_r_factor(p, TriangularSide::Minus)};
}

TensorOperator r_matrix(const TwistParams& p, RMatrixMethod method) {
    try {
        switch (method) {
            case RMatrixMethod::Gauss: {
                const GaussFactors f = gauss_factors(p);
                RatMatrix m = f.r_plus.entries * f.r0.entries * f.r_minus.entries;
                return TensorOperator{f.r_plus.domain, f.r_plus.codomain, std::move(m)};
            }
            case RMatrixMethod::Twist:
            case RMatrixMethod::TwistHat: {
                const Family family =
                    method == RMatrixMethod::Twist ? Family::F : Family::Fhat;
                const TensorOperator inv21 =
                    build_twist(p, TwistVariant{family, Direction::Inverse, true});
                const TensorOperator fwd12 =
                    build_twist(p, TwistVariant{family, Direction::Forward, false});
                RatMatrix m = inv21.entries * fwd12.entries;
                return TensorOperator{fwd12.domain, fwd12.codomain, std::move(m)};
            }
        }
    } catch (const PoleError& e) {
        throw PoleError(std::string("r_matrix[") + r_method_name(method) + "]: " + e.context(),
                        e.argument());
    }
    throw Error("r_matrix: unknown method");
}

TensorOperator fundamental_closed_form(const Rational& delta1, const Rational& delta2,
                                       const Rational& eta) {
    const HighestWeight half{Rational(1, 2)};
    const EvalRep r1(half, delta1, eta);
    const EvalRep r2(half, delta2, eta);
    TensorBasis basis = TensorBasis::full(r1, r2);
    const Rational d = delta1 - delta2;
    if ((d + eta).is_zero()) {
        throw PoleError("fundamental_closed_form", -d / eta);
    }
    RatMatrix m = (d / (d + eta)) * RatMatrix::identity(basis.states.size()) +
                  (eta / (d + eta)) * flip_matrix(basis, basis);
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

CheckReport check_intertwiner(const TwistParams& p) {
    const ReducibilityResult red = is_reducible(p);
    if (red.reducible) {
        throw PoleError(
            "check_intertwiner: the tensor product is reducible here, so the "
            "R-matrix or its inverse does not exist as an intertwiner",
            p.g_root());
    }
    CheckReport report;
    report.check = "intertwiner";
    report.params = params_echo(p.rep1, p.rep2);
    const TensorOperator r = r_matrix(p, RMatrixMethod::Twist);
    const PolyMatrix rp = to_poly(r.entries);
    for (YGen gen : {YGen::A, YGen::B, YGen::C, YGen::D}) {
        const PolyMatrix lhs = opposite_coproduct_op(gen, p.rep1, p.rep2).entries * rp;
        const PolyMatrix rhs = rp * coproduct_op(gen, p.rep1, p.rep2).entries;
        record_entrywise(report, ygen_name(gen), lhs, rhs, r.codomain, r.domain);
    }
    return report;
}

CheckReport check_factorization(const TwistParams& p) {
    CheckReport report;
    report.check = "factorization";
    report.params = params_echo(p.rep1, p.rep2);
    const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const TensorOperator f21_inv = build_twist(p, TwistVariant{Family::F, Direction::Inverse, true});
    const TensorOperator f12 = build_twist(p, TwistVariant{Family::F, Direction::Forward, false});
    const TensorOperator fh21_inv =
        build_twist(p, TwistVariant{Family::Fhat, Direction::Inverse, true});
    const TensorOperator fh12 = build_twist(p, TwistVariant{Family::Fhat, Direction::Forward, false});
    const GaussFactors gauss = gauss_factors(p);
    const TensorOperator q12 = q12_operator(p);
    const TensorOperator q21_inv = q21_inverse_operator(p);
    const RatMatrix gauss_product = gauss.r_plus.entries * gauss.r0.entries * gauss.r_minus.entries;
    record_entrywise(report, "F21^-1 F12 == R+ (R0/chi) R-", f21_inv.entries * f12.entries,
                     gauss_product, basis, basis);
    record_entrywise(report, "Fhat21^-1 Fhat12 == R+ (R0/chi) R-",
                     fh21_inv.entries * fh12.entries, gauss_product, basis, basis);
    record_entrywise(report, "Q21^-1 Q12 == R0/chi", q21_inv.entries * q12.entries,
                     gauss.r0.entries, basis, basis);
    record_entrywise(report, "F21^-1 == R+ Q21^-1", f21_inv.entries,
                     gauss.r_plus.entries * q21_inv.entries, basis, basis);
    record_entrywise(report, "F12 == Q12 R-", f12.entries,
                     q12.entries * gauss.r_minus.entries, basis, basis);
    return report;
}

CheckReport check_ybe(const EvalRep& rep1, const EvalRep& rep2, const EvalRep& rep3) {
    CheckReport report;
    report.check = "ybe";
    report.params = params_echo(rep1, rep2, rep3);
    const long d1 = rep1.dim();
    const long d2 = rep2.dim();
    const long d3 = rep3.dim();
    const RatMatrix r12 = pair_r_matrix(rep1, rep2, "(1,2)");
    const RatMatrix r13 = pair_r_matrix(rep1, rep3, "(1,3)");
    const RatMatrix r23 = pair_r_matrix(rep2, rep3, "(2,3)");
    const long n = d1 * d2 * d3;
    RatMatrix e12(n, n), e13(n, n), e23(n, n);
    for (long a = 0; a < d1; ++a) {
        for (long ap = 0; ap < d1; ++ap) {
            for (long b = 0; b < d2; ++b) {
                for (long bp = 0; bp < d2; ++bp) {
                    const Rational& v = r12.at(a * d2 + b, ap * d2 + bp);
                    if (v.is_zero()) {
                        continue;
                    }
                    for (long c = 0; c < d3; ++c) {
                        e12.at(triple_index(a, b, c, d2, d3), triple_index(ap, bp, c, d2, d3)) = v;
                    }
                }
            }
            for (long c = 0; c < d3; ++c) {
                for (long cp = 0; cp < d3; ++cp) {
                    const Rational& v = r13.at(a * d3 + c, ap * d3 + cp);
                    if (v.is_zero()) {
                        continue;
                    }
                    for (long b = 0; b < d2; ++b) {
                        e13.at(triple_index(a, b, c, d2, d3), triple_index(ap, b, cp, d2, d3)) = v;
                    }
                }
            }
        }
    }
    for (long b = 0; b < d2; ++b) {
        for (long bp = 0; bp < d2; ++bp) {
            for (long c = 0; c < d3; ++c) {
                for (long cp = 0; cp < d3; ++cp) {
                    const Rational& v = r23.at(b * d3 + c, bp * d3 + cp);
                    if (v.is_zero()) {
                        continue;
                    }
                    for (long a = 0; a < d1; ++a) {
                        e23.at(triple_index(a, b, c, d2, d3), triple_index(a, bp, cp, d2, d3)) = v;
                    }
                }
            }
        }
    }
    const RatMatrix lhs = e12 * e13 * e23;
    const RatMatrix rhs = e23 * e13 * e12;
    bool equal = true;
    for (long r = 0; r < n && equal; ++r) {
        for (long c = 0; c < n && equal; ++c) {
            if (lhs.at(r, c) != rhs.at(r, c)) {
                const auto label = [&](long idx) {
                    const long a = idx / (d2 * d3);
                    const long b = (idx / d3) % d2;
                    const long cc = idx % d3;
                    return "|" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(cc) + ">";
                };
                report.record_failure("R12 R13 R23 == R23 R13 R12",
                                      Witness{"coefficient of " + label(r) +
                                                  " in the image of " + label(c),
                                              rhs.at(r, c).str(), lhs.at(r, c).str()});
                equal = false;
            }
        }
    }
    if (equal) {
        report.record("R12 R13 R23 == R23 R13 R12", true);
    }
    return report;
}

}  // namespace yangian

#include "yangian/twist.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace yangian {

namespace {

void require_finite_pair(const TwistParams& p, const char* what) {
    if (!p.rep1.hw.finite_dimensional() || !p.rep2.hw.finite_dimensional()) {
        throw UnsupportedError(std::string(what) +
                               ": full-space operators require finite-dimensional factors; use "
                               "the weight-block interface for truncated Verma modules");
    }
}

void require_block_under_cutoffs(const TwistParams& p, long m, const char* what) {
    for (const EvalRep* rep : {&p.rep1, &p.rep2}) {
        if (!rep->hw.finite_dimensional() && m > *rep->hw.cutoff) {
            throw CutoffExceededError(std::string(what) + ": weight block " + std::to_string(m) +
                                      " exceeds the Verma cutoff " +
                                      std::to_string(*rep->hw.cutoff));
        }
    }
}

/// Number of factors in the reduced diagonal part q_{lk}: min(k, 2*lambda1-l)
/// for a finite-dimensional first factor, k for a Verma first factor.
long f_limit(const TwistParams& p, long l, long k) {
    if (p.rep1.hw.finite_dimensional()) {
        const long two_l1 = (Rational(2) * p.lambda1()).to_long();
        return std::min(k, std::max(0L, two_l1 - l));
    }
    return k;
}

/// Number of factors in the reduced diagonal parts q~_{lk} and q^_{lk}:
/// min(l, 2*lambda2-k) for a finite-dimensional second factor, l for a Verma
/// second factor.
long tilde_limit(const TwistParams& p, long l, long k) {
    if (p.rep2.hw.finite_dimensional()) {
        const long two_l2 = (Rational(2) * p.lambda2()).to_long();
        return std::min(l, std::max(0L, two_l2 - k));
    }
    return l;
}

std::string state_str(long l, long k) {
    return "|" + std::to_string(l) + "," + std::to_string(k) + ">";
}

/// Evaluates a product of g (or g~) factors split into denominator and
/// numerator argument lists. The split is fully reduced, so a vanishing
/// denominator factor is a genuine pole (PoleError) and a vanishing numerator
/// factor makes the whole entry zero.
Rational g_fraction(const TwistParams& p, bool tilde, const std::vector<Rational>& num_args,
                    const std::vector<Rational>& den_args, const std::string& ctx) {
    Rational value(1);
    for (const Rational& x : den_args) {
        const Rational factor = tilde ? p.g_tilde(x) : p.g(x);
        if (factor.is_zero()) {
            throw PoleError(ctx, x);
        }
        value /= factor;
    }
    for (const Rational& x : num_args) {
        const Rational factor = tilde ? p.g_tilde(x) : p.g(x);
        if (factor.is_zero()) {
            return Rational(0);
        }
        value *= factor;
    }
    return value;
}

/// The g-product fraction of the twist entry at ladder rung n in column
/// (l,k), exclusive of the ((+-eta)^n/n!)*prod(f e) prefactor.
Rational ladder_fraction(const TwistParams& p, Family family, Direction dir, long l, long k,
                         long n, const std::string& ctx) {
    const Rational two_l1 = Rational(2) * p.lambda1();
    const Rational two_l2 = Rational(2) * p.lambda2();
    std::vector<Rational> num, den;
    switch (family) {
        case Family::F:
            if (dir == Direction::Inverse) {
                const long limit = f_limit(p, l, k);
                for (long j = n + 1; j <= limit; ++j) num.emplace_back(k - l - j);
                for (long j = 1; j <= limit; ++j) den.push_back(Rational(j - 1) - two_l1);
            } else {
                const long limit = f_limit(p, l + n, k - n);
                for (long j = 1; j <= limit; ++j) num.push_back(Rational(j - 1) - two_l1);
                for (long j = 1; j <= n; ++j) den.emplace_back(k - l - 2 * n + j);
                for (long j = 1; j <= limit; ++j) den.emplace_back(k - l - 2 * n - j);
            }
            return g_fraction(p, false, num, den, ctx);
        case Family::Fhat:
            if (dir == Direction::Inverse) {
                const long limit = tilde_limit(p, l, k);
                for (long j = 1; j <= limit; ++j) num.push_back(two_l2 + Rational(1 - j));
                for (long j = 1; j <= limit; ++j) den.emplace_back(k - l + j);
                for (long j = 1; j <= n; ++j) den.emplace_back(k - l - j);
            } else {
                const long limit = tilde_limit(p, l + n, k - n);
                for (long j = n + 1; j <= limit; ++j) num.emplace_back(k - l - 2 * n + j);
                for (long j = 1; j <= limit; ++j) den.push_back(two_l2 + Rational(1 - j));
            }
            return g_fraction(p, false, num, den, ctx);
        case Family::Ftilde:
            if (dir == Direction::Inverse) {
                const long limit = tilde_limit(p, l, k);
                for (long j = n + 1; j <= limit; ++j) num.emplace_back(k - l + j);
                for (long j = 1; j <= limit; ++j) den.push_back(two_l2 + Rational(1 - j));
            } else {
                const long limit = tilde_limit(p, l - n, k + n);
                for (long j = 1; j <= limit; ++j) num.push_back(two_l2 + Rational(1 - j));
                for (long j = 1; j <= n; ++j) den.emplace_back(k - l + 2 * n - j);
                for (long j = 1; j <= limit; ++j) den.emplace_back(k - l + 2 * n + j);
            }
            return g_fraction(p, true, num, den, ctx);
    }
    throw Error("ladder_fraction: unknown family");
}

/// Fills the twist matrix column by column. Family Ftilde raises the first
/// index (targets (l-n, k+n)); families F and Fhat lower it ((l+n, k-n)).
/// The prefactor is accumulated one rung at a time and the ladder stops at
/// the basis boundary or on a vanishing sl2 coefficient.
TensorOperator build_on_basis(const TwistParams& p, Family family, Direction dir,
                              TensorBasis basis) {
    const bool up = (family == Family::Ftilde);
    const bool negative = (family == Family::Ftilde) == (dir == Direction::Forward);
    const Rational step_eta = negative ? -p.eta() : p.eta();
    RatMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        const std::string ctx = std::string("build_twist[") + family_name(family) + "," +
                                direction_name(dir) + "]: column " + state_str(l, k);
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
                lead *= step_eta * rung / Rational(n);
                if (lead.is_zero()) {
                    break;
                }
            }
            m.at(row, j) = lead * ladder_fraction(p, family, dir, l, k, n, ctx);
        }
    }
    TensorBasis codomain = basis;
    return TensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

template <class T>
void record_entrywise_impl(CheckReport& report, const std::string& item, const Matrix<T>& actual,
                           const Matrix<T>& expected, const TensorBasis& rows,
                           const TensorBasis& cols) {
    if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
        report.record_failure(item, Witness{item + ": shape",
                                            std::to_string(expected.rows()) + "x" +
                                                std::to_string(expected.cols()),
                                            std::to_string(actual.rows()) + "x" +
                                                std::to_string(actual.cols())});
        return;
    }
    for (std::size_t r = 0; r < actual.rows(); ++r) {
        for (std::size_t c = 0; c < actual.cols(); ++c) {
            if (!(actual.at(r, c) == expected.at(r, c))) {
                const auto [lr, kr] = rows.states[r];
                const auto [lc, kc] = cols.states[c];
                report.record_failure(
                    item, Witness{item + ": coefficient of " + state_str(lr, kr) +
                                      " in the image of " + state_str(lc, kc),
                                  expected.at(r, c).str(), actual.at(r, c).str()});
                return;
            }
        }
    }
    report.record(item, true);
}

}  // namespace

const char* family_name(Family family) {
    switch (family) {
        case Family::F: return "F";
        case Family::Ftilde: return "Ftilde";
        case Family::Fhat: return "Fhat";
    }
    return "?";
}

const char* direction_name(Direction direction) {
    return direction == Direction::Forward ? "forward" : "inverse";
}

TwistParams::TwistParams(EvalRep rep1_value, EvalRep rep2_value)
    : rep1(std::move(rep1_value)), rep2(std::move(rep2_value)) {
    if (rep1.eta != rep2.eta) {
        throw MismatchedEtaError("twist requires a shared eta: " + rep1.eta.str() + " vs " +
                                 rep2.eta.str());
    }
}

Rational TwistParams::g(const Rational& x) const {
    return rep1.delta - rep2.delta + eta() * (lambda1() - lambda2() + x);
}

Rational TwistParams::g_tilde(const Rational& x) const {
    return rep2.delta - rep1.delta + eta() * (lambda1() - lambda2() + x);
}

Rational TwistParams::g_root() const {
    return (rep2.delta - rep1.delta) / eta() + lambda2() - lambda1();
}

Rational TwistParams::g_tilde_root() const {
    return (rep1.delta - rep2.delta) / eta() + lambda2() - lambda1();
}

Rational m_coeff(const TwistParams& p, long k, long l, long n, bool tilde) {
    const std::string ctx = std::string("m_coeff[") + (tilde ? "tilde" : "plain") +
                            "](k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                            ", n=" + std::to_string(n) + ")";
    Rational value(1);
    for (long j = 1; j <= n; ++j) {
        Rational num, den_arg;
        if (tilde) {
            num = p.eta() * p.rep1.e_coeff(l - j + 1) * p.rep2.f_coeff(k + j - 1);
            den_arg = Rational(k - l + j);
        } else {
            num = -p.eta() * p.rep1.f_coeff(l + j - 1) * p.rep2.e_coeff(k - j + 1);
            den_arg = Rational(k - l - j);
        }
        const Rational den = tilde ? p.g_tilde(den_arg) : p.g(den_arg);
        if (den.is_zero()) {
            throw PoleError(ctx, den_arg);
        }
        value *= num / (Rational(j) * den);
    }
    return value;
}

Rational q_diag(const TwistParams& p, long l, long k, Family family) {
    const std::string ctx = std::string("q_diag[") + family_name(family) + "](l=" +
                            std::to_string(l) + ", k=" + std::to_string(k) + ")";
    const Rational two_l1 = Rational(2) * p.lambda1();
    const Rational two_l2 = Rational(2) * p.lambda2();
    std::vector<Rational> num, den;
    switch (family) {
        case Family::F: {
            const long limit = f_limit(p, l, k);
            for (long j = 1; j <= limit; ++j) num.emplace_back(k - l - j);
            for (long j = 1; j <= limit; ++j) den.push_back(Rational(j - 1) - two_l1);
            return g_fraction(p, false, num, den, ctx);
        }
        case Family::Ftilde: {
            const long limit = tilde_limit(p, l, k);
            for (long j = 1; j <= limit; ++j) num.emplace_back(k - l + j);
            for (long j = 1; j <= limit; ++j) den.push_back(two_l2 + Rational(1 - j));
            return g_fraction(p, true, num, den, ctx);
        }
        case Family::Fhat: {
            const long limit = tilde_limit(p, l, k);
            for (long j = 1; j <= limit; ++j) num.push_back(two_l2 + Rational(1 - j));
            for (long j = 1; j <= limit; ++j) den.emplace_back(k - l + j);
            return g_fraction(p, false, num, den, ctx);
        }
    }
    throw Error("q_diag: unknown family");
}

Rational gamma_form_q(const TwistParams& p, long l, long k, Family family) {
    const std::string ctx = std::string("gamma_form_q[") + family_name(family) + "](l=" +
                            std::to_string(l) + ", k=" + std::to_string(k) + ")";
    const Rational c = (p.rep1.delta - p.rep2.delta) / p.eta();
    const Rational& l1 = p.lambda1();
    const Rational& l2 = p.lambda2();
    Rational num, den;
    switch (family) {
        case Family::F:
            num = gamma_ratio(c + l1 - l2 - Rational(l), k);
            den = gamma_ratio(c - l1 - l2, k);
            if (den.is_zero()) {
                throw PoleError(ctx, p.g_root());
            }
            return num / den;
        case Family::Ftilde: {
            const Rational ct = -c;
            num = gamma_ratio(ct + l1 - l2 + Rational(k - l + 1), l);
            den = gamma_ratio(ct + l1 + l2 - Rational(l - 1), l);
            if (den.is_zero()) {
                throw PoleError(ctx, p.g_tilde_root());
            }
            return num / den;
        }
        case Family::Fhat:
            num = gamma_ratio(c + l1 + l2 + Rational(1 - l), l);
            den = gamma_ratio(c + l1 - l2 + Rational(k - l + 1), l);
            if (den.is_zero()) {
                throw PoleError(ctx, p.g_root());
            }
            return num / den;
    }
    throw Error("gamma_form_q: unknown family");
}

TensorOperator build_twist(const TwistParams& p, const TwistVariant& v) {
    if (v.swapped) {
        const TensorOperator sw =
            build_twist(p.swapped(), TwistVariant{v.family, v.direction, false});
        const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
        return conjugate_by_flip(sw, basis, basis);
    }
    require_finite_pair(p, "build_twist");
    return build_on_basis(p, v.family, v.direction, TensorBasis::full(p.rep1, p.rep2));
}

TensorOperator build_twist_block(const TwistParams& p, const TwistVariant& v, long m) {
    if (m >= 0) {
        require_block_under_cutoffs(p, m, "build_twist_block");
    }
    if (v.swapped) {
        const TensorOperator sw =
            build_twist_block(p.swapped(), TwistVariant{v.family, v.direction, false}, m);
        const TensorBasis basis = TensorBasis::block(p.rep1, p.rep2, m);
        return conjugate_by_flip(sw, basis, basis);
    }
    return build_on_basis(p, v.family, v.direction, TensorBasis::block(p.rep1, p.rep2, m));
}

PolyTensorOperator twisted_coproduct(const TwistParams& p, Family family, YGen gen) {
    const TensorOperator fwd = build_twist(p, TwistVariant{family, Direction::Forward, false});
    const TensorOperator inv = build_twist(p, TwistVariant{family, Direction::Inverse, false});
    PolyTensorOperator delta = coproduct_op(gen, p.rep1, p.rep2);
    PolyMatrix m = fwd.entries * (delta.entries * inv.entries);
    return PolyTensorOperator{std::move(delta.domain), std::move(delta.codomain), std::move(m)};
}

PolyTensorOperator twisted_coproduct_block(const TwistParams& p, Family family, YGen gen,
                                           long m) {
    PolyTensorOperator delta = coproduct_block(gen, p.rep1, p.rep2, m);
    const long mc = m + block_shift(gen);
    const TensorOperator inv =
        build_twist_block(p, TwistVariant{family, Direction::Inverse, false}, m);
    const TensorOperator fwd =
        build_twist_block(p, TwistVariant{family, Direction::Forward, false}, mc);
    PolyMatrix out = fwd.entries * (delta.entries * inv.entries);
    return PolyTensorOperator{std::move(delta.domain), std::move(delta.codomain), std::move(out)};
}

PolyTensorOperator expected_twisted_coproduct(const TwistParams& p, Family family, YGen gen) {
    require_finite_pair(p, "expected_twisted_coproduct");
    if ((family == Family::F && gen == YGen::A) ||
        (family == Family::Fhat && gen == YGen::A) ||
        (family == Family::Ftilde && gen == YGen::D)) {
        throw UnsupportedError(std::string("expected_twisted_coproduct: no closed form for (") +
                               family_name(family) + ", " + ygen_name(gen) + ")");
    }
    const std::string ctx = std::string("expected_twisted_coproduct[") + family_name(family) +
                            ", " + ygen_name(gen) + "]";
    TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const EvalRep& r1 = p.rep1;
    const EvalRep& r2 = p.rep2;
    const Rational& eta = p.eta();
    const Rational two_l1 = Rational(2) * p.lambda1();
    const Rational two_l2 = Rational(2) * p.lambda2();
    const bool tilde = (family == Family::Ftilde);
    // Weight fraction g(x_num)/g(x_den) (g~ for family Ftilde), evaluated
    // lazily so that absent ladder targets cannot raise spurious poles.
    const auto frac = [&](const Rational& x_num, const Rational& x_den) {
        const Rational den = tilde ? p.g_tilde(x_den) : p.g(x_den);
        if (den.is_zero()) {
            throw PoleError(ctx, x_den);
        }
        return (tilde ? p.g_tilde(x_num) : p.g(x_num)) / den;
    };
    // Single-factor diagonal polynomials entering the off-diagonal terms:
    // a-polynomials for family Ftilde, d-polynomials for F and Fhat.
    const auto poly1 = [&](long l) { return tilde ? r1.a_poly(l) : r1.d_poly(l); };
    const auto poly2 = [&](long k) { return tilde ? r2.a_poly(k) : r2.d_poly(k); };
    PolyMatrix m(basis.states.size(), basis.states.size());
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        const auto [l, k] = basis.states[j];
        const Rational d = Rational(k - l);
        const auto put = [&](long lt, long kt, const Poly& value) {
            const long i = basis.index_of(lt, kt);
            if (i >= 0) {
                m.at(i, j) = value;
            }
        };
        switch (gen) {
            case YGen::A:
                put(l, k, r1.a_poly(l) * r2.a_poly(k));
                break;
            case YGen::D:
                put(l, k, r1.d_poly(l) * r2.d_poly(k));
                break;
            case YGen::B:
                if (family == Family::Fhat) {
                    if (basis.index_of(l + 1, k) >= 0) {
                        put(l + 1, k, (eta * r1.f_coeff(l) * frac(Rational(-l - 1), d - 1)) *
                                          poly2(k));
                    }
                    if (basis.index_of(l, k + 1) >= 0) {
                        put(l, k + 1, (eta * r2.f_coeff(k) * frac(Rational(k + 1), d + 1)) *
                                          poly1(l));
                    }
                } else {
                    if (basis.index_of(l + 1, k) >= 0) {
                        put(l + 1, k, (eta * r1.f_coeff(l) * frac(two_l2 - Rational(l), d)) *
                                          poly2(k));
                    }
                    if (basis.index_of(l, k + 1) >= 0) {
                        put(l, k + 1, (eta * r2.f_coeff(k) * frac(Rational(k) - two_l1, d)) *
                                          poly1(l));
                    }
                }
                break;
            case YGen::C:
                if (family == Family::Fhat) {
                    if (basis.index_of(l - 1, k) >= 0) {
                        put(l - 1, k, (eta * r1.e_coeff(l) * frac(two_l2 - Rational(l - 1), d + 1)) *
                                          poly2(k));
                    }
                    if (basis.index_of(l, k - 1) >= 0) {
                        put(l, k - 1, (eta * r2.e_coeff(k) * frac(Rational(k - 1) - two_l1, d - 1)) *
                                          poly1(l));
                    }
                } else {
                    if (basis.index_of(l - 1, k) >= 0) {
                        put(l - 1, k, (eta * r1.e_coeff(l) * frac(Rational(-l), d)) * poly2(k));
                    }
                    if (basis.index_of(l, k - 1) >= 0) {
                        put(l, k - 1, (eta * r2.e_coeff(k) * frac(Rational(k), d)) * poly1(l));
                    }
                }
                break;
        }
    }
    TensorBasis codomain = basis;
    return PolyTensorOperator{std::move(basis), std::move(codomain), std::move(m)};
}

CheckReport check_diagonalization(const TwistParams& p) {
    CheckReport report;
    report.check = "diagonalization";
    report.params = params_echo(p.rep1, p.rep2);
    const TensorBasis basis = TensorBasis::full(p.rep1, p.rep2);
    const struct {
        Family family;
        YGen gen;
        const char* item;
    } cases[] = {{Family::F, YGen::D, "F: D -> d1*d2 diagonal"},
                 {Family::Ftilde, YGen::A, "Ftilde: A -> a1*a2 diagonal"}};
    for (const auto& c : cases) {
        const PolyTensorOperator actual = twisted_coproduct(p, c.family, c.gen);
        PolyMatrix expected(basis.states.size(), basis.states.size());
        for (std::size_t j = 0; j < basis.states.size(); ++j) {
            const auto [l, k] = basis.states[j];
            expected.at(j, j) = c.gen == YGen::D ? p.rep1.d_poly(l) * p.rep2.d_poly(k)
                                                 : p.rep1.a_poly(l) * p.rep2.a_poly(k);
        }
        record_entrywise(report, c.item, actual.entries, expected, basis, basis);
    }
    return report;
}

CheckReport check_cocommutativity(const TwistParams& p, Family family) {
    CheckReport report;
    report.check = std::string("cocommutativity[") + family_name(family) + "]";
    report.params = params_echo(p.rep1, p.rep2);
    report.params.emplace_back("family", family_name(family));
    for (YGen gen : {YGen::A, YGen::B, YGen::C, YGen::D}) {
        const PolyTensorOperator direct = twisted_coproduct(p, family, gen);
        const PolyTensorOperator swapped = twisted_coproduct(p.swapped(), family, gen);
        const PolyTensorOperator mirrored =
            conjugate_by_flip(swapped, direct.domain, direct.codomain);
        record_entrywise(report, ygen_name(gen), direct.entries, mirrored.entries,
                         direct.codomain, direct.domain);
    }
    return report;
}

CheckReport check_cocommutativity_block(const TwistParams& p, Family family, long m) {
    CheckReport report;
    report.check = std::string("cocommutativity_block[") + family_name(family) + "](m=" +
                   std::to_string(m) + ")";
    report.params = params_echo(p.rep1, p.rep2);
    report.params.emplace_back("family", family_name(family));
    report.params.emplace_back("block", std::to_string(m));
    for (YGen gen : {YGen::A, YGen::B, YGen::C, YGen::D}) {
        const PolyTensorOperator direct = twisted_coproduct_block(p, family, gen, m);
        const PolyTensorOperator swapped = twisted_coproduct_block(p.swapped(), family, gen, m);
        const PolyTensorOperator mirrored =
            conjugate_by_flip(swapped, direct.domain, direct.codomain);
        record_entrywise(report, ygen_name(gen), direct.entries, mirrored.entries,
                         direct.codomain, direct.domain);
    }
    return report;
}

void record_entrywise(CheckReport& report, const std::string& item, const PolyMatrix& actual,
                      const PolyMatrix& expected, const TensorBasis& rows,
                      const TensorBasis& cols) {
    record_entrywise_impl(report, item, actual, expected, rows, cols);
}

void record_entrywise(CheckReport& report, const std::string& item, const RatMatrix& actual,
                      const RatMatrix& expected, const TensorBasis& rows,
                      const TensorBasis& cols) {
    record_entrywise_impl(report, item, actual, expected, rows, cols);
}

}  // namespace yangian

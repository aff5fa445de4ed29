#ifndef YANGIAN_SPECTRA_HPP
#define YANGIAN_SPECTRA_HPP

#include <optional>
#include <vector>

#include "yangian/twist.hpp"

namespace yangian {

/// Outcome of the tensor-product reducibility test: V1 (x) V2 is reducible
/// iff (delta1 - delta2)/eta = sign * (lambda1 + lambda2 - j + 1) for an
/// integer 1 <= j <= min(2*lambda1, 2*lambda2). The witnessing (j, sign) is
/// unique when it exists.
struct ReducibilityResult {
    bool reducible = false;
    std::optional<long> j;
    std::optional<int> sign;
};

ReducibilityResult is_reducible(const TwistParams& p);

/// Existence data of the twists as functions of c = (delta1 - delta2)/eta:
/// the sets of c at which the forward twist F12 and the two inverse twists
/// have poles, plus the verdicts at the given parameters. f12_inv_ok reports
/// whether the inverse twists exist in both tensor orders, which holds
/// exactly when the product is irreducible.
struct ExistenceProfile {
    ReducibilityResult reducibility;
    std::vector<Rational> f12_pole_set;
    std::vector<Rational> f12_inv_pole_set;
    std::vector<Rational> f21_inv_pole_set;
    bool f12_ok = true;
    bool f12_inv_ok = true;
};

ExistenceProfile existence_profile(const TwistParams& p);

/// One probed value of c = (delta1 - delta2)/eta: whether each twist could
/// actually be built, the predictions from the pole sets, and whether the
/// two agree (including the reducibility verdict against the pair of
/// inverse-twist probes).
struct ScanCandidate {
    Rational value;
    bool f12_built = false;
    bool f12_inv_built = false;
    bool f21_inv_built = false;
    bool predicted_f12_pole = false;
    bool predicted_f12_inv_pole = false;
    bool predicted_f21_inv_pole = false;
    bool predicted_reducible = false;
    bool consistent = false;
};

struct ScanReport {
    Rational lambda1, lambda2, eta;
    std::vector<ScanCandidate> candidates;
    bool all_consistent = true;
};

/// Probes the construction of F12, F12^{-1} and F21^{-1} at
/// delta1 = c*eta, delta2 = 0 for every candidate c and compares the
/// outcomes with the predicted pole sets.
ScanReport scan_poles(const Rational& lambda1, const Rational& lambda2, const Rational& eta,
                      const std::vector<Rational>& candidates);

}  // namespace yangian

#endif  // YANGIAN_SPECTRA_HPP

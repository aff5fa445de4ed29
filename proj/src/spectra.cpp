#include "yangian/spectra.hpp"

#include <algorithm>

namespace yangian {

namespace {

void require_finite_pair(const TwistParams& p, const char* what) {
    if (!p.rep1.hw.finite_dimensional() || !p.rep2.hw.finite_dimensional()) {
        throw UnsupportedError(std::string(what) + ": requires finite-dimensional factors");
    }
}

bool contains(const std::vector<Rational>& set, const Rational& value) {
    return std::find(set.begin(), set.end(), value) != set.end();
}

bool try_build(const TwistParams& p, const TwistVariant& v) {
    try {
        build_twist(p, v);
        return true;
    } catch (const PoleError&) {
        return false;
    }
}

}  // namespace

ReducibilityResult is_reducible(const TwistParams& p) {
    require_finite_pair(p, "is_reducible");
    const Rational c = (p.rep1.delta - p.rep2.delta) / p.eta();
    const long j_max =
        std::min((Rational(2) * p.lambda1()).to_long(), (Rational(2) * p.lambda2()).to_long());
    for (long j = 1; j <= j_max; ++j) {
        const Rational t = p.lambda1() + p.lambda2() - Rational(j - 1);
        if (c == t) {
            return ReducibilityResult{true, j, 1};
        }
        if (c == -t) {
            return ReducibilityResult{true, j, -1};
        }
    }
    return ReducibilityResult{false, std::nullopt, std::nullopt};
}

ExistenceProfile existence_profile(const TwistParams& p) {
    require_finite_pair(p, "existence_profile");
    ExistenceProfile profile;
    profile.reducibility = is_reducible(p);
    const Rational c = (p.rep1.delta - p.rep2.delta) / p.eta();
    const Rational sum = p.lambda1() + p.lambda2();
    const long j_max =
        std::min((Rational(2) * p.lambda1()).to_long(), (Rational(2) * p.lambda2()).to_long());
    // Forward twist: poles fill the length-(2*(lambda1+lambda2)-1) ladder of
    // integer steps centred at 0; empty when either factor is 1-dimensional.
    if (j_max >= 1) {
        for (Rational x = -sum + Rational(1); x <= sum - Rational(1); x += Rational(1)) {
            profile.f12_pole_set.push_back(x);
        }
    }
    for (long j = j_max; j >= 1; --j) {
        profile.f12_inv_pole_set.push_back(sum + Rational(1 - j));
        profile.f21_inv_pole_set.push_back(-(sum + Rational(1 - j)));
    }
    std::sort(profile.f12_inv_pole_set.begin(), profile.f12_inv_pole_set.end());
    std::sort(profile.f21_inv_pole_set.begin(), profile.f21_inv_pole_set.end());
    profile.f12_ok = !contains(profile.f12_pole_set, c);
    profile.f12_inv_ok = !profile.reducibility.reducible;
    return profile;
}

ScanReport scan_poles(const Rational& lambda1, const Rational& lambda2, const Rational& eta,
                      const std::vector<Rational>& candidates) {
    ScanReport report;
    report.lambda1 = lambda1;
    report.lambda2 = lambda2;
    report.eta = eta;
    const HighestWeight hw1{lambda1};
    const HighestWeight hw2{lambda2};
    const ExistenceProfile profile = existence_profile(
        TwistParams(EvalRep(hw1, Rational(0), eta), EvalRep(hw2, Rational(0), eta)));
    for (const Rational& c : candidates) {
        const TwistParams p(EvalRep(hw1, c * eta, eta), EvalRep(hw2, Rational(0), eta));
        ScanCandidate item;
        item.value = c;
        item.f12_built = try_build(p, TwistVariant{Family::F, Direction::Forward, false});
        item.f12_inv_built = try_build(p, TwistVariant{Family::F, Direction::Inverse, false});
        item.f21_inv_built = try_build(p, TwistVariant{Family::F, Direction::Inverse, true});
        item.predicted_f12_pole = contains(profile.f12_pole_set, c);
        item.predicted_f12_inv_pole = contains(profile.f12_inv_pole_set, c);
        item.predicted_f21_inv_pole = contains(profile.f21_inv_pole_set, c);
        item.predicted_reducible = is_reducible(p).reducible;
        item.consistent = item.f12_built == !item.predicted_f12_pole &&
                          item.f12_inv_built == !item.predicted_f12_inv_pole &&
                          item.f21_inv_built == !item.predicted_f21_inv_pole &&
                          item.predicted_reducible ==
                              (!item.f12_inv_built || !item.f21_inv_built);
        report.all_consistent = report.all_consistent && item.consistent;
        report.candidates.push_back(std::move(item));
    }
    return report;
}

}  // namespace yangian

#include "yangian/tensor.hpp"

namespace yangian {

namespace {

void require_shared_eta(const EvalRep& rep1, const EvalRep& rep2) {
    if (rep1.eta != rep2.eta) {
        throw MismatchedEtaError("tensor factors have different eta: " + rep1.eta.str() +
                                 " vs " + rep2.eta.str());
    }
}

}  // namespace

TensorBasis TensorBasis::full(const EvalRep& rep1, const EvalRep& rep2) {
    require_shared_eta(rep1, rep2);
    TensorBasis basis{rep1, rep2, {}};
    basis.states.reserve(static_cast<std::size_t>(rep1.dim() * rep2.dim()));
    for (long l = 0; l < rep1.dim(); ++l) {
        for (long k = 0; k < rep2.dim(); ++k) {
            basis.states.emplace_back(l, k);
        }
    }
    return basis;
}

TensorBasis TensorBasis::block(const EvalRep& rep1, const EvalRep& rep2, long m) {
    require_shared_eta(rep1, rep2);
    TensorBasis basis{rep1, rep2, {}};
    for (long l = 0; l < rep1.dim(); ++l) {
        const long k = m - l;
        if (k >= 0 && k < rep2.dim()) {
            basis.states.emplace_back(l, k);
        }
    }
    return basis;
}

long TensorBasis::index_of(long l, long k) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].first == l && states[i].second == k) {
            return static_cast<long>(i);
        }
    }
    return -1;
}

TensorBasis weight_block(const EvalRep& rep1, const EvalRep& rep2, long m) {
    return TensorBasis::block(rep1, rep2, m);
}

namespace {

void echo_rep(std::vector<std::pair<std::string, std::string>>& out, const EvalRep& rep,
              const std::string& suffix) {
    out.emplace_back("lambda" + suffix, rep.lambda().str());
    out.emplace_back("delta" + suffix, rep.delta.str());
    if (rep.hw.cutoff.has_value()) {
        out.emplace_back("cutoff" + suffix, std::to_string(*rep.hw.cutoff));
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> params_echo(const EvalRep& rep1,
                                                             const EvalRep& rep2) {
    std::vector<std::pair<std::string, std::string>> out;
    echo_rep(out, rep1, "1");
    echo_rep(out, rep2, "2");
    out.emplace_back("eta", rep1.eta.str());
    return out;
}

std::vector<std::pair<std::string, std::string>> params_echo(const EvalRep& rep1,
                                                             const EvalRep& rep2,
                                                             const EvalRep& rep3) {
    std::vector<std::pair<std::string, std::string>> out;
    echo_rep(out, rep1, "1");
    echo_rep(out, rep2, "2");
    echo_rep(out, rep3, "3");
    out.emplace_back("eta", rep1.eta.str());
    return out;
}

RatMatrix flip_matrix(const TensorBasis& from, const TensorBasis& to) {
    RatMatrix p(to.states.size(), from.states.size());
    for (std::size_t c = 0; c < from.states.size(); ++c) {
        const auto [l, k] = from.states[c];
        const long r = to.index_of(k, l);
        if (r < 0) {
            throw Error("flip map: target basis lacks the mirrored state");
        }
        p.at(r, c) = Rational(1);
    }
    return p;
}

}  // namespace yangian

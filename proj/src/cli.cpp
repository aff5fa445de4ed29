#include "yangian/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yangian/rmatrix.hpp"
#include "yangian/serialize.hpp"

namespace yangian {

namespace {

struct CommonConfig {
    std::string lambda1, lambda2, delta1, delta2;
    std::string eta;
    std::optional<long> cutoff1, cutoff2;
    std::string format = "json";
    std::string output;
};

void add_format_options(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--output", cfg.output, "Write output to this file instead of stdout");
}

void add_rep_options(CLI::App* cmd, CommonConfig& cfg, bool with_deltas) {
    cmd->add_option("--lambda1", cfg.lambda1, "Highest weight of the first factor")->required();
    cmd->add_option("--lambda2", cfg.lambda2, "Highest weight of the second factor")->required();
    if (with_deltas) {
        cmd->add_option("--delta1", cfg.delta1, "Evaluation point of the first factor")
            ->required();
        cmd->add_option("--delta2", cfg.delta2, "Evaluation point of the second factor")
            ->required();
        cmd->add_option("--cutoff1", cfg.cutoff1,
                        "Verma truncation of the first factor (basis |0>..|N>)");
        cmd->add_option("--cutoff2", cfg.cutoff2, "Verma truncation of the second factor");
    }
    cmd->add_option("--eta", cfg.eta, "Deformation step eta")->required();
    add_format_options(cmd, cfg);
}

EvalRep make_rep(const std::string& lambda, const std::string& delta, const std::string& eta,
                 const std::optional<long>& cutoff) {
    const Rational lam = Rational::parse(lambda);
    const HighestWeight hw = cutoff ? HighestWeight(lam, *cutoff) : HighestWeight(lam);
    return EvalRep(hw, Rational::parse(delta), Rational::parse(eta));
}

TwistParams make_pair(const CommonConfig& cfg) {
    return TwistParams(make_rep(cfg.lambda1, cfg.delta1, cfg.eta, cfg.cutoff1),
                       make_rep(cfg.lambda2, cfg.delta2, cfg.eta, cfg.cutoff2));
}

int emit(const std::string& text, const CommonConfig& cfg) {
    if (cfg.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

int emit_matrix(const TensorOperator& op, ordered_json metadata, const char* object,
                const CommonConfig& cfg) {
    std::string text;
    if (cfg.format == "json") {
        ordered_json j;
        j["object"] = object;
        j["metadata"] = std::move(metadata);
        j["basis"] = basis_json(op.domain);
        j["entries"] = entries_json(op.entries);
        text = json_text(j);
    } else if (cfg.format == "csv") {
        text = matrix_csv(op);
    } else {
        text = matrix_pretty(op);
    }
    return emit(text, cfg);
}

int emit_reports(const std::vector<CheckReport>& reports, const std::string& suite,
                 const CommonConfig& cfg) {
    bool passed = true;
    for (const CheckReport& report : reports) {
        passed = passed && report.passed;
    }
    std::string text;
    if (cfg.format == "json") {
        ordered_json j;
        j["object"] = "check";
        j["suite"] = suite;
        j["passed"] = passed;
        ordered_json list = ordered_json::array();
        for (const CheckReport& report : reports) {
            list.push_back(report_json(report));
        }
        j["reports"] = std::move(list);
        text = json_text(j);
    } else if (cfg.format == "csv") {
        text = reports_csv(reports);
    } else {
        text = reports_pretty(reports);
    }
    const int status = emit(text, cfg);
    return status != 0 ? status : (passed ? 0 : 1);
}

std::vector<Rational> parse_candidates(const std::string& list) {
    std::vector<Rational> values;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            values.push_back(Rational::parse(item));
        }
    }
    if (values.empty()) {
        throw Error("scan: empty candidate list");
    }
    return values;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Exact factorizing twists and Gauss-decomposed R-matrices for evaluation "
                 "representations of the Yangian of sl2"};
    app.require_subcommand(1);

    CommonConfig twist_cfg;
    std::string family = "F";
    std::string direction = "inverse";
    bool swapped = false;
    std::optional<long> block;
    CLI::App* twist_cmd = app.add_subcommand("twist", "Build one twist matrix");
    add_rep_options(twist_cmd, twist_cfg, true);
    twist_cmd->add_option("--family", family, "Twist family")
        ->check(CLI::IsMember({"F", "Ftilde", "Fhat"}));
    twist_cmd->add_option("--direction", direction, "Forward twist or its inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    twist_cmd->add_flag("--swapped", swapped, "Exchange the tensor factors (F21-type matrix)");
    twist_cmd->add_option("--block", block, "Restrict to the weight block l+k = m");

    CommonConfig rmatrix_cfg;
    std::string method = "twist";
    CLI::App* rmatrix_cmd = app.add_subcommand("rmatrix", "Build the R-matrix");
    add_rep_options(rmatrix_cmd, rmatrix_cfg, true);
    rmatrix_cmd->add_option("--method", method, "Construction route")
        ->check(CLI::IsMember({"gauss", "twist", "twist_hat"}));

    CommonConfig check_cfg;
    std::string suite = "all";
    std::string lambda3, delta3;
    CLI::App* check_cmd = app.add_subcommand("check", "Run exact property checks");
    add_rep_options(check_cmd, check_cfg, true);
    check_cmd->add_option("--suite", suite, "Which checks to run")
        ->check(CLI::IsMember({"diag", "cocomm", "factor", "intertwine", "ybe", "all"}));
    check_cmd->add_option("--lambda3", lambda3, "Third factor for the Yang-Baxter check");
    check_cmd->add_option("--delta3", delta3, "Evaluation point of the third factor");

    CommonConfig scan_cfg;
    std::string candidates;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Probe twist poles over candidate values");
    add_rep_options(scan_cmd, scan_cfg, false);
    scan_cmd->add_option("--candidates", candidates,
                         "Comma-separated values of (delta1-delta2)/eta")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (twist_cmd->parsed()) {
            const TwistParams p = make_pair(twist_cfg);
            TwistVariant v;
            v.family = family == "F" ? Family::F
                       : family == "Ftilde" ? Family::Ftilde
                                            : Family::Fhat;
            v.direction = direction == "forward" ? Direction::Forward : Direction::Inverse;
            v.swapped = swapped;
            const TensorOperator op = block ? build_twist_block(p, v, *block) : build_twist(p, v);
            ordered_json metadata;
            metadata["family"] = family_name(v.family);
            metadata["direction"] = direction_name(v.direction);
            metadata["swapped"] = v.swapped;
            if (block) {
                metadata["block"] = *block;
            }
            metadata["params"] = params_json(params_echo(p.rep1, p.rep2));
            return emit_matrix(op, std::move(metadata), "twist", twist_cfg);
        }
        if (rmatrix_cmd->parsed()) {
            const TwistParams p = make_pair(rmatrix_cfg);
            const RMatrixMethod m = method == "gauss"   ? RMatrixMethod::Gauss
                                    : method == "twist" ? RMatrixMethod::Twist
                                                        : RMatrixMethod::TwistHat;
            const TensorOperator op = r_matrix(p, m);
            ordered_json metadata;
            metadata["method"] = r_method_name(m);
            metadata["params"] = params_json(params_echo(p.rep1, p.rep2));
            return emit_matrix(op, std::move(metadata), "rmatrix", rmatrix_cfg);
        }
        if (check_cmd->parsed()) {
            const TwistParams p = make_pair(check_cfg);
            const bool all = suite == "all";
            std::vector<CheckReport> reports;
            if (all || suite == "diag") {
                reports.push_back(check_diagonalization(p));
            }
            if (all || suite == "cocomm") {
                for (Family fam : {Family::F, Family::Ftilde, Family::Fhat}) {
                    reports.push_back(check_cocommutativity(p, fam));
                }
            }
            if (all || suite == "factor") {
                reports.push_back(check_factorization(p));
            }
            if (all || suite == "intertwine") {
                reports.push_back(check_intertwiner(p));
            }
            if (suite == "ybe" || (all && !lambda3.empty())) {
                if (lambda3.empty() || delta3.empty()) {
                    std::cerr << "error: the ybe suite needs --lambda3 and --delta3\n";
                    return 2;
                }
                reports.push_back(check_ybe(p.rep1, p.rep2,
                                            make_rep(lambda3, delta3, check_cfg.eta, {})));
            }
            return emit_reports(reports, suite, check_cfg);
        }
        if (scan_cmd->parsed()) {
            const ScanReport report =
                scan_poles(Rational::parse(scan_cfg.lambda1), Rational::parse(scan_cfg.lambda2),
                           Rational::parse(scan_cfg.eta), parse_candidates(candidates));
            std::string text;
            if (scan_cfg.format == "json") {
                text = json_text(scan_json(report));
            } else if (scan_cfg.format == "csv") {
                text = scan_csv(report);
            } else {
                text = scan_pretty(report);
            }
            const int status = emit(text, scan_cfg);
            return status != 0 ? status : (report.all_consistent ? 0 : 1);
        }
    } catch (const PoleError& e) {
        std::cerr << "pole error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace yangian

#include "yangian/serialize.hpp"

#include <sstream>

namespace yangian {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string state_str(long l, long k) {
    return "|" + std::to_string(l) + "," + std::to_string(k) + ">";
}

}  // namespace

ordered_json rational_json(const Rational& value) { return value.str(); }

ordered_json poly_json(const Poly& value) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : value.coefficients()) {
        coeffs.push_back(c.str());
    }
    return coeffs;
}

ordered_json basis_json(const TensorBasis& basis) {
    ordered_json states = ordered_json::array();
    for (const auto& [l, k] : basis.states) {
        states.push_back(ordered_json::array({l, k}));
    }
    return states;
}

ordered_json entries_json(const RatMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(rational_json(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json entries_json(const PolyMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(poly_json(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, value] : params) {
        obj[key] = value;
    }
    return obj;
}

ordered_json operator_json(const TensorOperator& op) {
    ordered_json j;
    j["basis"] = basis_json(op.domain);
    j["entries"] = entries_json(op.entries);
    return j;
}

ordered_json operator_json(const PolyTensorOperator& op) {
    ordered_json j;
    j["basis"] = basis_json(op.domain);
    j["entries"] = entries_json(op.entries);
    return j;
}

ordered_json report_json(const CheckReport& report) {
    ordered_json j;
    j["check"] = report.check;
    j["params"] = params_json(report.params);
    j["passed"] = report.passed;
    ordered_json items = ordered_json::array();
    for (const auto& [name, ok] : report.items) {
        ordered_json item;
        item["item"] = name;
        item["passed"] = ok;
        items.push_back(std::move(item));
    }
    j["items"] = std::move(items);
    if (report.witness) {
        ordered_json w;
        w["location"] = report.witness->location;
        w["expected"] = report.witness->expected;
        w["actual"] = report.witness->actual;
        j["witness"] = std::move(w);
    }
    return j;
}

ordered_json scan_json(const ScanReport& report) {
    ordered_json j;
    j["object"] = "scan";
    ordered_json params;
    params["lambda1"] = report.lambda1.str();
    params["lambda2"] = report.lambda2.str();
    params["eta"] = report.eta.str();
    j["params"] = std::move(params);
    ordered_json items = ordered_json::array();
    for (const ScanCandidate& c : report.candidates) {
        ordered_json item;
        item["value"] = c.value.str();
        item["f12_built"] = c.f12_built;
        item["f12_inv_built"] = c.f12_inv_built;
        item["f21_inv_built"] = c.f21_inv_built;
        item["predicted_f12_pole"] = c.predicted_f12_pole;
        item["predicted_f12_inv_pole"] = c.predicted_f12_inv_pole;
        item["predicted_f21_inv_pole"] = c.predicted_f21_inv_pole;
        item["predicted_reducible"] = c.predicted_reducible;
        item["consistent"] = c.consistent;
        items.push_back(std::move(item));
    }
    j["candidates"] = std::move(items);
    j["all_consistent"] = report.all_consistent;
    return j;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string matrix_csv(const TensorOperator& op) {
    std::ostringstream out;
    out << "row,col,entry\n";
    for (std::size_t r = 0; r < op.entries.rows(); ++r) {
        for (std::size_t c = 0; c < op.entries.cols(); ++c) {
            out << r << "," << c << "," << csv_field(op.entries.at(r, c).str()) << "\n";
        }
    }
    return out.str();
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "check,item,passed\n";
    for (const CheckReport& report : reports) {
        for (const auto& [name, ok] : report.items) {
            out << csv_field(report.check) << "," << csv_field(name) << "," << bool_str(ok)
                << "\n";
        }
    }
    return out.str();
}

std::string scan_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "value,f12_built,f12_inv_built,f21_inv_built,predicted_f12_pole,"
           "predicted_f12_inv_pole,predicted_f21_inv_pole,predicted_reducible,consistent\n";
    for (const ScanCandidate& c : report.candidates) {
        out << csv_field(c.value.str()) << "," << bool_str(c.f12_built) << ","
            << bool_str(c.f12_inv_built) << "," << bool_str(c.f21_inv_built) << ","
            << bool_str(c.predicted_f12_pole) << "," << bool_str(c.predicted_f12_inv_pole) << ","
            << bool_str(c.predicted_f21_inv_pole) << "," << bool_str(c.predicted_reducible) << ","
            << bool_str(c.consistent) << "\n";
    }
    return out.str();
}

std::string matrix_pretty(const TensorOperator& op) {
    std::ostringstream out;
    for (std::size_t j = 0; j < op.domain.states.size(); ++j) {
        const auto [l, k] = op.domain.states[j];
        out << state_str(l, k) << " -> ";
        bool first = true;
        for (std::size_t r = 0; r < op.codomain.states.size(); ++r) {
            const Rational& v = op.entries.at(r, j);
            if (v.is_zero()) {
                continue;
            }
            const auto [lt, kt] = op.codomain.states[r];
            if (!first) {
                out << " + ";
            }
            out << "(" << v.str() << ")" << state_str(lt, kt);
            first = false;
        }
        if (first) {
            out << "0";
        }
        out << "\n";
    }
    return out.str();
}

std::string reports_pretty(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const CheckReport& report : reports) {
        out << "check: " << report.check << "\n";
        for (const auto& [key, value] : report.params) {
            out << "  " << key << " = " << value << "\n";
        }
        for (const auto& [name, ok] : report.items) {
            out << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
        if (report.witness) {
            out << "  witness: " << report.witness->location << "\n";
            out << "    expected: " << report.witness->expected << "\n";
            out << "    actual:   " << report.witness->actual << "\n";
        }
        out << "result: " << (report.passed ? "pass" : "FAIL") << "\n";
    }
    return out.str();
}

std::string scan_pretty(const ScanReport& report) {
    std::ostringstream out;
    out << "pole scan: lambda1 = " << report.lambda1.str() << ", lambda2 = "
        << report.lambda2.str() << ", eta = " << report.eta.str() << "\n";
    for (const ScanCandidate& c : report.candidates) {
        out << "  c = " << c.value.str() << ": F12 " << (c.f12_built ? "built" : "pole") << ", "
            << "F12^-1 " << (c.f12_inv_built ? "built" : "pole") << ", "
            << "F21^-1 " << (c.f21_inv_built ? "built" : "pole") << ", "
            << (c.predicted_reducible ? "reducible" : "irreducible") << ", "
            << (c.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    out << "all consistent: " << (report.all_consistent ? "yes" : "NO") << "\n";
    return out.str();
}

}  // namespace yangian

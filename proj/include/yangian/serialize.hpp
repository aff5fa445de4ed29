#ifndef YANGIAN_SERIALIZE_HPP
#define YANGIAN_SERIALIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yangian/report.hpp"
#include "yangian/spectra.hpp"
#include "yangian/tensor.hpp"

namespace yangian {

using ordered_json = nlohmann::ordered_json;

/// "p/q" (or "p" for integers), ASCII base 10.
ordered_json rational_json(const Rational& value);

/// Coefficient array of "p/q" strings, constant term first.
ordered_json poly_json(const Poly& value);

/// [[l,k], ...] in basis order.
ordered_json basis_json(const TensorBasis& basis);

/// Row-major nested arrays; rational entries as "p/q" strings, polynomial
/// entries as coefficient arrays.
ordered_json entries_json(const RatMatrix& m);
ordered_json entries_json(const PolyMatrix& m);

/// Key/value pairs as a JSON object in the given order.
ordered_json params_json(const std::vector<std::pair<std::string, std::string>>& params);

/// {basis, entries}.
ordered_json operator_json(const TensorOperator& op);
ordered_json operator_json(const PolyTensorOperator& op);

/// {check, params, passed, items, witness?}.
ordered_json report_json(const CheckReport& report);

/// {object, params, candidates, all_consistent}.
ordered_json scan_json(const ScanReport& report);

/// Canonical text form: 2-space indentation plus a trailing newline, so that
/// identical inputs produce byte-identical files.
std::string json_text(const ordered_json& j);

/// CSV flattenings. Matrices become (row, col, entry) triples; reports become
/// (check, item, passed) rows; scans one row per candidate. Fields containing
/// commas or quotes are double-quoted.
std::string matrix_csv(const TensorOperator& op);
std::string reports_csv(const std::vector<CheckReport>& reports);
std::string scan_csv(const ScanReport& report);

/// Human-readable text forms.
std::string matrix_pretty(const TensorOperator& op);
std::string reports_pretty(const std::vector<CheckReport>& reports);
std::string scan_pretty(const ScanReport& report);

}  // namespace yangian

#endif  // YANGIAN_SERIALIZE_HPP

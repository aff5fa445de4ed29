#ifndef YANGIAN_REPORT_HPP
#define YANGIAN_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

/// First failing entry of an exact comparison.
struct Witness {
    std::string location;
    std::string expected;
    std::string actual;
};

/// Structured outcome of an exact property check: per-item booleans, the
/// overall verdict, and (on failure) the first differing matrix entry.
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, bool>> items;
    bool passed = true;
    std::optional<Witness> witness;

    void record(const std::string& item, bool ok) {
        items.emplace_back(item, ok);
        passed = passed && ok;
    }

    void record_failure(const std::string& item, Witness w) {
        items.emplace_back(item, false);
        passed = false;
        if (!witness) {
            witness = std::move(w);
        }
    }
};

}  // namespace yangian

#endif  // YANGIAN_REPORT_HPP

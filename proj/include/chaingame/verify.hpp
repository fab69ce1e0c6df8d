#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chaingame {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyReport {
    std::string id;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const;
    // One "PASS name: detail" line per check, in check order.
    std::string text() const;
};

// chainprod, hypercube, wedge2, mainthm, mb-ad-equiv, movetrick, mult, kmap,
// bias3, gap.
const std::vector<std::string>& theoremIds();

// Runs one bundle. ConfigError for an unknown id.
VerifyReport runVerification(std::string_view id);

/// The bundled table of solved instances (read-only).
class SolvedTable {
public:
    static const SolvedTable& bundled();
    explicit SolvedTable(nlohmann::json records);

    // Value of the unique record whose fields include every field of `query`.
    int value(const nlohmann::json& query) const;
    const nlohmann::json& records() const { return records_; }

private:
    nlohmann::json records_;
};

// Directory holding solved_instances.json; CHAINGAME_DATA_DIR overrides the
// build-time default.
std::string dataDirectory();

} // namespace chaingame

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace domlab::acceptance {

struct Options {
    /// Print per-criterion wall time (off by default so output is reproducible).
    bool timings = false;
    /// "name graph6" lines replacing the frozen graph6 table.
    std::optional<std::string> fixture_file;
    /// graph6 file for the optional external check; taken from
    /// DOMLAB_COUNTEREXAMPLE when unset.
    std::optional<std::string> counterexample;
    std::int64_t counterexample_budget_ms = 60000;
};

struct Result {
    int id = 0;
    std::string name;
    enum class Outcome { pass, fail, skip } outcome = Outcome::fail;
    std::string detail;
    double seconds = 0;
    nlohmann::json data = nlohmann::json::object();
};

/// Named fixtures used across criteria.
const std::vector<std::string>& fixture_names();

std::vector<Result> run_all(const Options& options);

/// One "PASS|FAIL|SKIP [id] name: detail" line per criterion followed by a
/// "RESULT {...}" JSON line. Returns true when nothing failed.
bool report(const std::vector<Result>& results, const Options& options, std::ostream& out);

}  // namespace domlab::acceptance

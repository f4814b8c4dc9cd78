#pragma once

// The theorem-check registry: every certified identity and empirical probe,
// addressable by stable id, runnable with a seed, and serializable to a
// deterministic JSON run report.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frlp::checks {

enum class Severity { exact, empirical };

struct CheckResult {
    bool pass = false;
    double max_err = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct Entry {
    std::string id;        // frozen; renames require alias entries
    std::string law;       // the identity or bound the entry certifies
    Severity severity = Severity::exact;
    std::function<CheckResult(std::uint64_t seed)> run;
};

const std::vector<Entry>& registry();

struct RunOptions {
    std::string filter;        // regex on ids; empty = all
    std::uint64_t seed = 7;
    bool strict = false;       // empirical entries gate the exit too
    int jobs = 1;
    bool timings = false;      // include runtimes in the report (breaks byte determinism)
};

struct RunReport {
    struct Row {
        std::string id;
        std::string law;
        Severity severity;
        CheckResult result;
        double runtime_ms = 0.0;
    };
    std::vector<Row> rows;
    std::uint64_t seed = 0;
    bool strict = false;
    int gated_failures = 0;
    int warnings = 0;
};

RunReport run_checks(const RunOptions& opt);

// Deterministic JSON serialization (keys in fixed order).
std::string report_to_json(const RunReport& report, const RunOptions& opt);
std::string report_summary(const RunReport& report);

} // namespace frlp::checks

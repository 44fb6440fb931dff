#pragma once

#include <string>
#include <vector>

namespace quiverlab {

// One reproduced claim. `origin` says where the expected value comes from:
// "article" for values stated in the source article, "oracle" for values
// computed by an independent method, "identity" for structural laws.
struct CheckReport {
    std::string name;
    std::string expected;
    std::string origin;
    std::string computed;
    bool pass = false;
    double seconds = 0.0;  // wall time, left out of the JSON form
};

// Targets: "a_n" (1 <= n <= 5), "d_n" (4 <= n <= 6), "sec5-1" and
// "fig5-family" (n ignored). Module errors become failed reports.
// Throws InvalidSpec for an unknown target or n out of range.
std::vector<CheckReport> run_checks(const std::string& target, int n = 0);
std::vector<std::string> check_targets();

// Deterministic JSON array of {name, expected, origin, computed, pass}.
std::string checks_to_json(const std::vector<CheckReport>& reports);
// "PASS name: computed (expected ..., origin)" lines.
std::string checks_to_text(const std::vector<CheckReport>& reports, bool timing = false);

}  // namespace quiverlab

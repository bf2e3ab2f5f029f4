#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrad/bitgraph.hpp"

namespace wrad {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Per-case checks; return a failure description naming the parameters, or
// nothing when the case holds.
std::optional<std::string> check_eq1_case(const Graph& g, int n, int r, int s);
std::optional<std::string> check_eq2_case(const Digraph& d, int n, int r, int s);

SuiteResult verify_eq1_sweep();     // Wiener/radius of g_nrs vs closed form, full grid
SuiteResult verify_eq2_sweep();     // same for d_nrs
SuiteResult verify_increments();    // first differences of the closed forms
SuiteResult verify_sizes();         // edge/arc counts vs the max-size formulas
SuiteResult verify_figures();       // fixed-topology fixtures and their identities
SuiteResult verify_codecs(std::uint64_t seed = 20240901);

std::vector<std::string> verify_suite_names();
// which = "all" or a suite name; throws std::invalid_argument otherwise.
std::vector<SuiteResult> run_suites(const std::string& which);

}  // namespace wrad

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wrad/canonical.hpp"
#include "wrad/enumerate.hpp"

namespace wrad {

struct ExtremalEntry {
    Certificate cert;
    std::string encoding;  // graph6 / digraph6 of the canonical representative
};

struct SurveyReport {
    std::string mode;
    int n = 0;
    std::optional<int> r;
    bool empty = true;  // no object met the constraint
    std::optional<long long> optimum;
    std::vector<ExtremalEntry> extremal;  // sorted by certificate
    long long classes_examined = 0;       // isomorphism classes scanned
    long long classes_matching = 0;       // ...of which met the constraint
    bool extremal_all_acyclic = false;    // filled by the max-wiener mode
    long long elapsed_ms = 0;

    nlohmann::json to_json(bool include_timing = false) const;
};

// Minimum Wiener index over all graphs with order n and radius exactly r,
// with every extremal isomorphism class. 2 <= n <= 10.
SurveyReport min_wiener_radius_survey(int n, int r, int threads = 1);

// Maximum Wiener index over all graphs with order n and radius exactly r.
SurveyReport max_wiener_radius_survey(int n, int r, int threads = 1);

// Maximum Wiener index over strongly connected digraphs with out-radius 1,
// by exhausting the (n-1)^2 free arc bits around a universal out-star.
// n <= 6.
SurveyReport max_wiener_outradius1_survey(int n);

}  // namespace wrad

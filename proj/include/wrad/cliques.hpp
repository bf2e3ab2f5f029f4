#pragma once

#include <vector>

#include "wrad/bitgraph.hpp"

namespace wrad {

// Exact clique number by branch and bound. Desk scale: order <= 64.
int clique_number(const Graph& g);

// Greedy clique over S = {v : deg(v) >= min_degree}: repeatedly take the
// lowest-index vertex of U and intersect U with its neighborhood. The result
// is a clique of size at least ceil(|S| / (n - min_degree)) when
// min_degree < n. Empty S gives an empty clique.
std::vector<int> greedy_degree_clique(const Graph& g, int min_degree);

}  // namespace wrad

#pragma once

#include <string>
#include <vector>

namespace wrad::formulas {

// Closed-form integer evaluators. All arithmetic is exact; parameter domains
// are enforced (std::domain_error outside them) and any division is checked
// for exactness first. Half-integer radii are passed doubled (doubled_r).

long long binom2(long long n);

// Minimum Wiener index of the order-n radius-r extremal family:
// C(n,2) + (r-1)^2 n - r(r-1)^2, for n >= 2r >= 6.
long long eq1_wiener(long long n, long long r);

// Digraph analogue for out-radius r:
// 2 C(n,2) + (r-1)^2 n - 4 C(r,3), for n >= 2r >= 6.
long long eq2_wiener(long long n, long long r);

// Maximum number of edges of a graph with order n and radius r:
// C(n,2) for r=1, floor(n(n-2)/2) for r=2, ((n-2r)^2 + 5n - 6r)/2 otherwise
// (needs n >= 2r >= 6).
long long vizing_max_size(long long n, long long r);

// Maximum number of arcs of a strongly connected digraph with order n and
// out-radius r >= 3, n >= 2r: (n-(r-1))^2 + (r-3).
long long digraph_max_arcs(long long n, long long r);

// Exact minimum digraph Wiener index for radius 1, 3/2 or 2 (doubled_r in
// {2,3,4}): 2C(n,2), 2C(n,2)+ceil(n/2), n^2.
long long min_digraph_wiener_small_r(long long n, int doubled_r);

// 2 C(n,2) + floor((r-0.5)^2) n for radius r = doubled_r/2 >= 5/2.
long long min_rad_lower_bound(long long n, int doubled_r);

// Wiener lower bound attained by the doubled-cycle construction with two
// chords: 2rn^2 - 4r^2 n + 2r(2r-1) + r^3 - r^2.
long long maxrad_construction_lower(long long n, long long r);

// Exact Wiener index of the out-radius-r long-cycle family (n = qr+k with
// 2 <= k <= r+1): sum_{p=0}^{q-1} sum_{i=1}^{r} (n-pr)(n-pr-i) + k*k(k-1)/2.
long long maxradplus_construction_wiener(long long n, long long r);

// Maximum digraph Wiener index with out-radius 1: (n^3 - n)/3.
long long radplus1_max_wiener(long long n);

// Decomposition n = q*r + k with 2 <= k <= r+1 (unique for r >= 2, n >= r+2).
struct QkDecomposition {
    long long q;
    long long k;
};
QkDecomposition decompose_qk(long long n, long long r);

// CLI-facing dispatch: evaluates formula `id` on `params`.
long long evaluate_formula(const std::string& id, const std::vector<long long>& params);
std::vector<std::string> formula_ids();

}  // namespace wrad::formulas

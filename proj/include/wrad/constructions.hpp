#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrad/bitgraph.hpp"

namespace wrad {

// Primitive generators. Vertex labels are fixed so encodings are reproducible.
Graph clique(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int k);       // k >= 3
Graph hypercube3();             // Q_3, vertices 0..7, edges = one differing bit
Digraph bidirected_clique(int n);
Digraph directed_cycle(int k);  // k >= 2

// Blow-up of vertex v by h: drop v, join every former neighbor of v to all of
// h, keep h's internal edges. Result labels: g's other vertices first (order
// preserved), then h's vertices. Digraph version preserves arc directions.
Graph blow_up(const Graph& g, int v, const Graph& h);
Digraph blow_up_digraph(const Digraph& d, int v, const Digraph& h);

// Cycle C_{2r} with two consecutive vertices blown up by cliques K_s and
// K_{n-2r+2-s}. Needs r >= 2, n >= 2r, 1 <= s <= (n-2r+2)/2.
Graph g_nrs(int n, int r, int s);

// Core digraph on vertices v_1..v_r, w_1..w_r: arcs v_i->v_j and w_i->w_j iff
// j <= i+1 (i != j), plus v_i->w_1 and w_i->v_1 for all i. Labels: v_i at
// i-1, w_i at r+i-1. Needs r >= 3.
Digraph d_2r_r_1(int r);

// Blow-ups of v_1 and w_1 of the core by bidirected cliques K_s and
// K_{n-2r+2-s}. Needs r >= 3, n >= 2r, 1 <= s <= (n-2r+2)/2.
Digraph d_nrs(int n, int r, int s);

// Directed cycle C_d with one vertex blown up by an independent set of size
// n-d+1. Labels: cycle path u_1..u_{d-1} at 0..d-2, independent copies after.
Digraph dp(int n, int d);

// dp(n,2r) plus backward chords u_from -> u_to (1-based positions on the
// cycle path, from > to).
Digraph dp_with_chords(int n, int r, const std::vector<std::pair<int, int>>& chords);

// dp(n,2r) plus the arcs u_r->u_1 and u_{2r-1}->u_r; radius exactly r.
Digraph max_rad_construction(int n, int r);

// Minimum-Wiener radius-r construction, r = doubled_r/2 >= 5/2, n > r+2.
// Integer r: one vertex of a directed C_{r+1} blown up by a bidirected
// K_{n-r}. Half-integer r: directed C_{r+1.5} with one reverse arc between
// two consecutive vertices, blow-up at the tail of that reverse arc.
Digraph min_rad_construction(int n, int doubled_r);

// Bidirected clique minus the arcs of vertex-disjoint directed cycles with
// the given lengths (each >= 2, summing to n); radius exactly 2.
Digraph min_rad2_digraph(int n, const std::vector<int>& cycle_lengths);

// Bidirected clique minus ceil(n/2) spanning single arcs (a directed
// near-perfect matching); radius exactly 3/2. Needs n >= 3.
Digraph matching_complement_digraph(int n);

// Fixed small topologies used by the extremal searches.
enum class FixedDigraph {
    kMinRad3Seed,     // 5 vertices, 9 arcs, rad = 3; blow-up vertex kMinRad3SeedBlowup
    kMaxOutrad1Chain, // out-star + directed chain, outradius 1, Wiener (n^3-n)/3
    kMaxOutrad1Fork,  // same but two chain starts merging at the third vertex
};
constexpr int kMinRad3SeedBlowup = 3;

// Builds the topology at order n (blow-up / chain part sized accordingly).
Digraph fixed_digraph(FixedDigraph which, int n);

// Out-radius-r family with large Wiener: hub feeding a spiral chain, arcs
// hub->v_{pr+1} for p = 0..q where n = qr+k, 2 <= k <= r+1. Hub at n-1,
// v_i at i-1.
Digraph max_outradius_family(int n, int r);

// Chord sets (1-based (from,to) on the dp cycle path) of the known extremal
// maximum-Wiener radius-r digraphs; exact for r <= 4, conjectured 5 <= r <= 7.
std::vector<std::vector<std::pair<int, int>>> expected_optimal_chords(int r);

// CLI-facing registry.
struct ConstructionSpec {
    std::string family;
    std::optional<long long> n;
    std::optional<long long> r;
    std::optional<long long> s;
    std::optional<long long> d;
    std::optional<long long> doubled_r;
    std::optional<long long> variant;
    std::vector<int> cycle_lengths;
    std::vector<std::pair<int, int>> chords;
};

struct BuiltConstruction {
    std::optional<Graph> graph;
    std::optional<Digraph> digraph;
};

BuiltConstruction build_construction(const ConstructionSpec& spec);
std::vector<std::string> construction_families();

}  // namespace wrad

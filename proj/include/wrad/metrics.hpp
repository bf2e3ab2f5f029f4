#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wrad/bitgraph.hpp"

namespace wrad {

// Distances are exact non-negative integers; kUnreachable marks absent paths.
// A Wiener index is std::nullopt when some pair is unreachable (reported as
// "infinite" downstream, never as a saturated number).
constexpr std::uint16_t kUnreachable = 0xFFFF;

using WienerValue = std::optional<long long>;
using MetricValue = std::optional<int>;

struct DistanceMatrix {
    int order = 0;
    bool directed = false;
    std::vector<std::uint16_t> dist;  // row-major, order*order entries

    std::uint16_t at(int u, int v) const { return dist[static_cast<size_t>(u) * order + v]; }
};

std::vector<std::uint16_t> bfs_distances(const Graph& g, int source);
std::vector<std::uint16_t> bfs_distances(const Digraph& d, int source);

DistanceMatrix all_pairs(const Graph& g);
DistanceMatrix all_pairs(const Digraph& d);

// Sum of d(u,v) over unordered pairs; nullopt if g is disconnected.
WienerValue wiener(const Graph& g);
// Sum over ordered pairs; nullopt unless d is strongly connected.
WienerValue wiener_digraph(const Digraph& d);

// Per-vertex eccentricities; kUnreachable entries encode infinite eccentricity.
std::vector<std::uint16_t> eccentricities(const Graph& g);
struct DigraphEccentricities {
    std::vector<std::uint16_t> out;  // ecc+(v) = max_u d(v,u)
    std::vector<std::uint16_t> in;   // ecc-(v) = max_u d(u,v)
};
DigraphEccentricities eccentricities(const Digraph& d);

struct RadiusDiameter {
    MetricValue radius;
    MetricValue diameter;
};
RadiusDiameter radius_diameter(const Graph& g);

// doubled_radius stores 2*rad(D) = min_x (ecc+(x) + ecc-(x)) so half-integer
// radii stay exact integers.
struct DigraphRadii {
    MetricValue out_radius;
    MetricValue in_radius;
    MetricValue doubled_radius;
};
DigraphRadii digraph_radii(const Digraph& d);

bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& d);

struct GraphMetrics {
    int order = 0;
    WienerValue wiener;
    MetricValue radius;
    MetricValue diameter;
    std::vector<std::uint16_t> ecc;
};

struct DigraphMetrics {
    int order = 0;
    WienerValue wiener;
    MetricValue out_radius;
    MetricValue in_radius;
    MetricValue doubled_radius;
    bool strongly_connected = false;
    std::vector<std::uint16_t> ecc_out;
    std::vector<std::uint16_t> ecc_in;
};

GraphMetrics graph_metrics(const Graph& g);
DigraphMetrics digraph_metrics(const Digraph& d);

}  // namespace wrad

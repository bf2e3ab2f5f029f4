#pragma once

#include <array>
#include <cstdint>

#include "wrad/bitgraph.hpp"

namespace wrad {

// Compact adjacency-mask graphs for the enumeration and search inner loops
// (order <= kSmallMax). One 32-bit row per vertex.
constexpr int kSmallMax = 18;
constexpr std::uint8_t kSmallUnreachable = 0xFF;

struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, kSmallMax> adj{};

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    bool operator==(const SmallGraph& o) const;
};

struct SmallDigraph {
    int n = 0;
    std::array<std::uint32_t, kSmallMax> out{};

    bool has_arc(int u, int v) const { return (out[u] >> v) & 1u; }
    void add_arc(int u, int v) { out[u] |= 1u << v; }
    SmallDigraph transposed() const;
    bool operator==(const SmallDigraph& o) const;
};

SmallGraph to_small(const Graph& g);
SmallDigraph to_small(const Digraph& d);
Graph to_graph(const SmallGraph& g);
Digraph to_digraph(const SmallDigraph& d);

// Single-source BFS over mask rows; fills dist with kSmallUnreachable first.
void small_bfs(const std::uint32_t* rows, int n, int source, std::uint8_t* dist);

struct SmallGraphMetrics {
    bool connected = false;
    int radius = -1;
    int diameter = -1;
    long long wiener = -1;  // valid only when connected
};
SmallGraphMetrics small_graph_metrics(const SmallGraph& g);

struct SmallDigraphMetrics {
    bool strongly_connected = false;
    int out_radius = -1;       // min over v of max_u d(v,u); -1 if infinite
    int doubled_radius = -1;   // min over v of ecc+(v)+ecc-(v); -1 if infinite
    long long wiener = -1;     // valid only when strongly connected
};
SmallDigraphMetrics small_digraph_metrics(const SmallDigraph& d);

long long small_edge_count(const SmallGraph& g);
bool small_is_forest(const SmallGraph& g);

}  // namespace wrad

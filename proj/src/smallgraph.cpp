#include "wrad/smallgraph.hpp"

#include <bit>
#include <stdexcept>

namespace wrad {

namespace {

bool rows_equal(const std::array<std::uint32_t, kSmallMax>& a,
                const std::array<std::uint32_t, kSmallMax>& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

bool SmallGraph::operator==(const SmallGraph& o) const { return n == o.n && rows_equal(adj, o.adj, n); }

bool SmallDigraph::operator==(const SmallDigraph& o) const { return n == o.n && rows_equal(out, o.out, n); }

SmallDigraph SmallDigraph::transposed() const {
    SmallDigraph t;
    t.n = n;
    for (int u = 0; u < n; ++u) {
        std::uint32_t m = out[u];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            t.out[v] |= 1u << u;
        }
    }
    return t;
}

SmallGraph to_small(const Graph& g) {
    if (g.order() > kSmallMax) throw std::invalid_argument("to_small: order too large");
    SmallGraph s;
    s.n = g.order();
    for (int u = 0; u < s.n; ++u) s.adj[u] = static_cast<std::uint32_t>(g.row(u)[0]);
    return s;
}

SmallDigraph to_small(const Digraph& d) {
    if (d.order() > kSmallMax) throw std::invalid_argument("to_small: order too large");
    SmallDigraph s;
    s.n = d.order();
    for (int u = 0; u < s.n; ++u) s.out[u] = static_cast<std::uint32_t>(d.out_row(u)[0]);
    return s;
}

Graph to_graph(const SmallGraph& g) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Digraph to_digraph(const SmallDigraph& d) {
    Digraph out(d.n);
    for (int u = 0; u < d.n; ++u) {
        std::uint32_t m = d.out[u];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.add_arc(u, v);
        }
    }
    return out;
}

void small_bfs(const std::uint32_t* rows, int n, int source, std::uint8_t* dist) {
    for (int i = 0; i < n; ++i) dist[i] = kSmallUnreachable;
    dist[source] = 0;
    std::uint32_t visited = 1u << source;
    std::uint32_t frontier = visited;
    std::uint8_t level = 0;
    while (frontier) {
        ++level;
        std::uint32_t next = 0;
        std::uint32_t m = frontier;
        while (m) {
            next |= rows[std::countr_zero(m)];
            m &= m - 1;
        }
        next &= ~visited;
        m = next;
        while (m) {
            dist[std::countr_zero(m)] = level;
            m &= m - 1;
        }
        visited |= next;
        frontier = next;
    }
}

SmallGraphMetrics small_graph_metrics(const SmallGraph& g) {
    SmallGraphMetrics out;
    long long total = 0;
    int radius = 255, diameter = 0;
    std::uint8_t dist[kSmallMax];
    for (int s = 0; s < g.n; ++s) {
        small_bfs(g.adj.data(), g.n, s, dist);
        int ecc = 0;
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] == kSmallUnreachable) return out;  // disconnected
            ecc = std::max(ecc, static_cast<int>(dist[v]));
            total += dist[v];
        }
        radius = std::min(radius, ecc);
        diameter = std::max(diameter, ecc);
    }
    out.connected = true;
    out.radius = g.n == 1 ? 0 : radius;
    out.diameter = diameter;
    out.wiener = total / 2;
    return out;
}

SmallDigraphMetrics small_digraph_metrics(const SmallDigraph& d) {
    SmallDigraphMetrics out;
    std::uint8_t dist[kSmallMax];
    int ecc_out[kSmallMax], ecc_in[kSmallMax];
    long long total = 0;
    for (int s = 0; s < d.n; ++s) {
        small_bfs(d.out.data(), d.n, s, dist);
        int ecc = 0;
        for (int v = 0; v < d.n; ++v) {
            if (dist[v] == kSmallUnreachable) return out;  // not strongly connected
            ecc = std::max(ecc, static_cast<int>(dist[v]));
            total += dist[v];
        }
        ecc_out[s] = ecc;
    }
    SmallDigraph t = d.transposed();
    for (int s = 0; s < d.n; ++s) {
        small_bfs(t.out.data(), d.n, s, dist);
        int ecc = 0;
        for (int v = 0; v < d.n; ++v) ecc = std::max(ecc, static_cast<int>(dist[v]));
        ecc_in[s] = ecc;
    }
    out.strongly_connected = true;
    out.wiener = total;
    int best_out = 255, best_sum = 512;
    for (int v = 0; v < d.n; ++v) {
        best_out = std::min(best_out, ecc_out[v]);
        best_sum = std::min(best_sum, ecc_out[v] + ecc_in[v]);
    }
    out.out_radius = d.n == 1 ? 0 : best_out;
    out.doubled_radius = d.n == 1 ? 0 : best_sum;
    return out;
}

long long small_edge_count(const SmallGraph& g) {
    long long c = 0;
    for (int v = 0; v < g.n; ++v) c += std::popcount(g.adj[v]);
    return c / 2;
}

bool small_is_forest(const SmallGraph& g) {
    // DFS cycle check.
    std::array<std::int8_t, kSmallMax> parent;
    parent.fill(-2);
    for (int root = 0; root < g.n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::array<std::uint8_t, kSmallMax> stack;
        int top = 0;
        stack[top++] = static_cast<std::uint8_t>(root);
        while (top) {
            int u = stack[--top];
            std::uint32_t m = g.adj[u];
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (v == parent[u]) continue;
                if (parent[v] != -2) return false;
                parent[v] = static_cast<std::int8_t>(u);
                stack[top++] = static_cast<std::uint8_t>(v);
            }
        }
    }
    return true;
}

}  // namespace wrad

#include "wrad/metrics.hpp"

#include <algorithm>
#include <bit>

namespace wrad {

namespace {

// Frontier-expansion BFS over bit rows. rows(v) returns the adjacency row of
// v; dist must have n entries, pre-filled with kUnreachable.
template <typename RowFn>
void bfs_bits(RowFn rows, int words, int source, std::uint16_t* dist) {
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    visited[source >> 6] |= 1ull << (source & 63);
    frontier = visited;
    dist[source] = 0;
    std::uint16_t level = 0;
    for (;;) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t m = frontier[w];
            while (m) {
                int v = w * 64 + std::countr_zero(m);
                m &= m - 1;
                const std::uint64_t* r = rows(v);
                for (int x = 0; x < words; ++x) next[x] |= r[x];
            }
        }
        bool any = false;
        for (int w = 0; w < words; ++w) {
            next[w] &= ~visited[w];
            if (next[w]) any = true;
        }
        if (!any) break;
        for (int w = 0; w < words; ++w) {
            std::uint64_t m = next[w];
            while (m) {
                dist[w * 64 + std::countr_zero(m)] = level;
                m &= m - 1;
            }
            visited[w] |= next[w];
        }
        frontier = next;
    }
}

void check_source(int source, int n, const char* what) {
    if (source < 0 || source >= n) throw std::out_of_range(std::string(what) + ": source out of range");
}

WienerValue wiener_from_matrix(const DistanceMatrix& m, bool ordered) {
    long long total = 0;
    const int n = m.order;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::uint16_t d = m.at(u, v);
            if (d == kUnreachable) return std::nullopt;
            total += d;
        }
    return ordered ? total : total / 2;
}

MetricValue min_finite(const std::vector<std::uint16_t>& xs) {
    std::uint16_t best = kUnreachable;
    for (std::uint16_t x : xs) best = std::min(best, x);
    if (best == kUnreachable) return std::nullopt;
    return static_cast<int>(best);
}

MetricValue max_or_infinite(const std::vector<std::uint16_t>& xs) {
    std::uint16_t best = 0;
    for (std::uint16_t x : xs) {
        if (x == kUnreachable) return std::nullopt;
        best = std::max(best, x);
    }
    return static_cast<int>(best);
}

}  // namespace

std::vector<std::uint16_t> bfs_distances(const Graph& g, int source) {
    check_source(source, g.order(), "bfs_distances");
    std::vector<std::uint16_t> dist(g.order(), kUnreachable);
    bfs_bits([&](int v) { return g.row(v); }, g.words_per_row(), source, dist.data());
    return dist;
}

std::vector<std::uint16_t> bfs_distances(const Digraph& d, int source) {
    check_source(source, d.order(), "bfs_distances");
    std::vector<std::uint16_t> dist(d.order(), kUnreachable);
    bfs_bits([&](int v) { return d.out_row(v); }, d.words_per_row(), source, dist.data());
    return dist;
}

DistanceMatrix all_pairs(const Graph& g) {
    DistanceMatrix m;
    m.order = g.order();
    m.directed = false;
    m.dist.assign(static_cast<size_t>(m.order) * m.order, kUnreachable);
    for (int s = 0; s < m.order; ++s)
        bfs_bits([&](int v) { return g.row(v); }, g.words_per_row(), s,
                 m.dist.data() + static_cast<size_t>(s) * m.order);
    return m;
}

DistanceMatrix all_pairs(const Digraph& d) {
    DistanceMatrix m;
    m.order = d.order();
    m.directed = true;
    m.dist.assign(static_cast<size_t>(m.order) * m.order, kUnreachable);
    for (int s = 0; s < m.order; ++s)
        bfs_bits([&](int v) { return d.out_row(v); }, d.words_per_row(), s,
                 m.dist.data() + static_cast<size_t>(s) * m.order);
    return m;
}

WienerValue wiener(const Graph& g) { return wiener_from_matrix(all_pairs(g), false); }

WienerValue wiener_digraph(const Digraph& d) { return wiener_from_matrix(all_pairs(d), true); }

std::vector<std::uint16_t> eccentricities(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint16_t> ecc(n, 0);
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        std::uint16_t e = 0;
        for (std::uint16_t x : dist) {
            if (x == kUnreachable) {
                e = kUnreachable;
                break;
            }
            e = std::max(e, x);
        }
        ecc[s] = e;
    }
    return ecc;
}

DigraphEccentricities eccentricities(const Digraph& d) {
    const int n = d.order();
    DigraphEccentricities e;
    e.out.assign(n, 0);
    e.in.assign(n, 0);
    auto fold = [&](const std::vector<std::uint16_t>& dist) -> std::uint16_t {
        std::uint16_t m = 0;
        for (std::uint16_t x : dist) {
            if (x == kUnreachable) return kUnreachable;
            m = std::max(m, x);
        }
        return m;
    };
    Digraph t = d.transpose();
    for (int s = 0; s < n; ++s) {
        e.out[s] = fold(bfs_distances(d, s));
        e.in[s] = fold(bfs_distances(t, s));
    }
    return e;
}

RadiusDiameter radius_diameter(const Graph& g) {
    auto ecc = eccentricities(g);
    return RadiusDiameter{min_finite(ecc), max_or_infinite(ecc)};
}

DigraphRadii digraph_radii(const Digraph& d) {
    auto ecc = eccentricities(d);
    DigraphRadii r;
    r.out_radius = min_finite(ecc.out);
    r.in_radius = min_finite(ecc.in);
    int best = -1;
    for (int v = 0; v < d.order(); ++v) {
        if (ecc.out[v] == kUnreachable || ecc.in[v] == kUnreachable) continue;
        int s = ecc.out[v] + ecc.in[v];
        if (best < 0 || s < best) best = s;
    }
    r.doubled_radius = best < 0 ? MetricValue{} : MetricValue{best};
    return r;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

bool is_strongly_connected(const Digraph& d) {
    auto out = bfs_distances(d, 0);
    if (std::find(out.begin(), out.end(), kUnreachable) != out.end()) return false;
    auto in = bfs_distances(d.transpose(), 0);
    return std::find(in.begin(), in.end(), kUnreachable) == in.end();
}

GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics m;
    m.order = g.order();
    m.ecc = eccentricities(g);
    m.radius = min_finite(m.ecc);
    m.diameter = max_or_infinite(m.ecc);
    m.wiener = wiener(g);
    return m;
}

DigraphMetrics digraph_metrics(const Digraph& d) {
    DigraphMetrics m;
    m.order = d.order();
    auto ecc = eccentricities(d);
    m.ecc_out = std::move(ecc.out);
    m.ecc_in = std::move(ecc.in);
    m.out_radius = min_finite(m.ecc_out);
    m.in_radius = min_finite(m.ecc_in);
    int best = -1;
    for (int v = 0; v < d.order(); ++v) {
        if (m.ecc_out[v] == kUnreachable || m.ecc_in[v] == kUnreachable) continue;
        int s = m.ecc_out[v] + m.ecc_in[v];
        if (best < 0 || s < best) best = s;
    }
    m.doubled_radius = best < 0 ? MetricValue{} : MetricValue{best};
    m.wiener = wiener_digraph(d);
    m.strongly_connected = m.wiener.has_value();
    return m;
}

}  // namespace wrad

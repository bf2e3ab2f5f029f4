#include "wrad/bitgraph.hpp"

#include <bit>

namespace wrad {

namespace {

int popcount_row(const std::uint64_t* row, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

std::vector<int> bits_of_row(const std::uint64_t* row, int words) {
    std::vector<int> out;
    for (int w = 0; w < words; ++w) {
        std::uint64_t m = row[w];
        while (m) {
            out.push_back(w * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

void check_perm(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabeled: permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("relabeled: not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount_row(row(v), words_);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += popcount_row(row(v), words_);
    return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    return bits_of_row(row(v), words_);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    check_perm(perm, n_);
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.add_edge(perm[u], perm[v]);
    return out;
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return popcount_row(out_row(v), words_);
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    int c = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_arc(u, v)) ++c;
    return c;
}

long long Digraph::arc_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += popcount_row(out_row(v), words_);
    return total;
}

std::vector<int> Digraph::out_neighbors(int v) const {
    check_vertex(v);
    return bits_of_row(out_row(v), words_);
}

Digraph Digraph::transpose() const {
    Digraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbors(u)) out.add_arc(v, u);
    return out;
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
    check_perm(perm, n_);
    Digraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbors(u)) out.add_arc(perm[u], perm[v]);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Digraph complement_digraph(const Digraph& d) {
    const int n = d.order();
    Digraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !d.has_arc(u, v)) out.add_arc(u, v);
    return out;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = g.degree(v);
    return out;
}

std::vector<DegreeTriple> degrees(const Digraph& d) {
    std::vector<DegreeTriple> out(d.order());
    for (int v = 0; v < d.order(); ++v) {
        int op = d.out_degree(v);
        int ip = d.in_degree(v);
        out[v] = DegreeTriple{op, ip, op + ip};
    }
    return out;
}

}  // namespace wrad

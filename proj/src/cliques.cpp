#include "wrad/cliques.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace wrad {

namespace {

struct MaxCliqueSearch {
    const std::uint64_t* rows;
    int best = 0;

    void expand(int size, std::uint64_t cand) {
        if (!cand) {
            if (size > best) best = size;
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        // Pivot on the candidate with the most candidate-neighbors.
        int pivot = -1, pivot_deg = -1;
        std::uint64_t m = cand;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int deg = std::popcount(rows[v] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        std::uint64_t branch = cand & ~rows[pivot];
        while (branch) {
            int v = std::countr_zero(branch);
            branch &= branch - 1;
            expand(size + 1, cand & rows[v]);
            cand &= ~(1ull << v);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw std::invalid_argument("clique_number: order > 64 unsupported");
    std::uint64_t rows[64] = {};
    for (int v = 0; v < n; ++v) rows[v] = g.row(v)[0];
    MaxCliqueSearch s;
    s.rows = rows;
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    s.expand(0, all);
    return s.best;
}

std::vector<int> greedy_degree_clique(const Graph& g, int min_degree) {
    const int n = g.order();
    std::vector<char> in_u(n, 0);
    int remaining = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= min_degree) {
            in_u[v] = 1;
            ++remaining;
        }
    std::vector<int> clique;
    while (remaining > 0) {
        int v = 0;
        while (!in_u[v]) ++v;  // arbitrary choice resolved as lowest index
        clique.push_back(v);
        remaining = 0;
        for (int u = 0; u < n; ++u) {
            in_u[u] = in_u[u] && g.has_edge(v, u);
            if (in_u[u]) ++remaining;
        }
    }
    return clique;
}

}  // namespace wrad

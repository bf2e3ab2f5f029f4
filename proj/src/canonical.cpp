#include "wrad/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

// Canonical labeling by individualization-refinement backtracking.
//
// An ordered partition of the vertices is refined to equitability (every
// vertex keyed by its cell plus its adjacency counts into each cell, cells
// split accordingly, repeated to a fixed point). While cells remain, the
// first non-singleton cell is branched on: each member in turn is
// individualized and the search recurses. Discrete partitions are complete
// labelings; the minimal adjacency bitstring over all of them is the
// certificate. Two prunings keep this tractable:
//   - a branch whose forced labeling prefix already compares greater than
//     the best bitstring cannot contain the minimum (or any automorphism
//     witness of it) and is skipped;
//   - within a branching cell, vertices equivalent to an already-explored
//     one under discovered automorphisms that fix the individualization
//     path are skipped.
// Every pair of equal-certificate leaves contributes one automorphism;
// these generate the full group, so vertex orbits come from their closure.

namespace wrad {

namespace {

struct Partition {
    int ncells = 1;
    std::array<std::uint8_t, kCanonMax> color{};  // vertex -> cell index, cells ordered
};

struct Ctx {
    int n = 0;
    bool directed = false;
    std::array<std::uint32_t, kCanonMax> out{};
    std::array<std::uint32_t, kCanonMax> in{};
};

// Splits cells by (cell, out-counts, in-counts) keys until equitable.
void refine(const Ctx& ctx, Partition& p) {
    const int n = ctx.n;
    while (p.ncells < n) {
        std::uint32_t cellmask[kCanonMax] = {};
        for (int v = 0; v < n; ++v) cellmask[p.color[v]] |= 1u << v;
        // Count bytes packed per cell: cells 0..7 in lo, 8..15 in hi.
        std::uint64_t out_lo[kCanonMax], out_hi[kCanonMax], in_lo[kCanonMax], in_hi[kCanonMax];
        for (int v = 0; v < n; ++v) {
            std::uint64_t olo = 0, ohi = 0, ilo = 0, ihi = 0;
            for (int c = 0; c < p.ncells; ++c) {
                std::uint64_t oc = static_cast<std::uint64_t>(std::popcount(ctx.out[v] & cellmask[c]));
                if (c < 8) olo |= oc << (8 * c);
                else ohi |= oc << (8 * (c - 8));
                if (ctx.directed) {
                    std::uint64_t ic = static_cast<std::uint64_t>(std::popcount(ctx.in[v] & cellmask[c]));
                    if (c < 8) ilo |= ic << (8 * c);
                    else ihi |= ic << (8 * (c - 8));
                }
            }
            out_lo[v] = olo;
            out_hi[v] = ohi;
            in_lo[v] = ilo;
            in_hi[v] = ihi;
        }
        int order[kCanonMax];
        for (int v = 0; v < n; ++v) order[v] = v;
        auto key_less = [&](int a, int b) {
            if (p.color[a] != p.color[b]) return p.color[a] < p.color[b];
            if (out_lo[a] != out_lo[b]) return out_lo[a] < out_lo[b];
            if (out_hi[a] != out_hi[b]) return out_hi[a] < out_hi[b];
            if (in_lo[a] != in_lo[b]) return in_lo[a] < in_lo[b];
            return in_hi[a] < in_hi[b];
        };
        auto key_eq = [&](int a, int b) {
            return p.color[a] == p.color[b] && out_lo[a] == out_lo[b] && out_hi[a] == out_hi[b] &&
                   in_lo[a] == in_lo[b] && in_hi[a] == in_hi[b];
        };
        std::sort(order, order + n, key_less);
        Partition np;
        int cells = 0;
        np.color[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (!key_eq(order[i], order[i - 1])) ++cells;
            np.color[order[i]] = static_cast<std::uint8_t>(cells);
        }
        np.ncells = cells + 1;
        if (np.ncells == p.ncells) return;  // no split: equitable
        p = np;
    }
}

void individualize(Partition& p, int v) {
    const std::uint8_t c = p.color[v];
    for (int u = 0; u < kCanonMax; ++u) {
        if (u == v) continue;
        if (p.color[u] > c) ++p.color[u];
        else if (p.color[u] == c && u != v) p.color[u] = c + 1;
    }
    ++p.ncells;
}

void push_bit(std::array<std::uint64_t, 4>& words, int& pos, bool bit) {
    if (bit) words[pos >> 6] |= 1ull << (63 - (pos & 63));
    ++pos;
}

// Adjacency bits of the first `len` labeled vertices, colex pair order.
std::array<std::uint64_t, 4> prefix_bits(const Ctx& ctx, const std::uint8_t* lab, int len, int* nbits) {
    std::array<std::uint64_t, 4> words{};
    int pos = 0;
    for (int j = 1; j < len; ++j)
        for (int i = 0; i < j; ++i) {
            push_bit(words, pos, (ctx.out[lab[i]] >> lab[j]) & 1u);
            if (ctx.directed) push_bit(words, pos, (ctx.out[lab[j]] >> lab[i]) & 1u);
        }
    *nbits = pos;
    return words;
}

int compare_bit_prefix(const std::array<std::uint64_t, 4>& a, const std::array<std::uint64_t, 4>& b,
                       int nbits) {
    for (int w = 0; nbits > 0 && w < 4; ++w, nbits -= 64) {
        int use = std::min(nbits, 64);
        std::uint64_t mask = use == 64 ? ~0ull : ~0ull << (64 - use);
        std::uint64_t x = a[w] & mask, y = b[w] & mask;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

struct Searcher {
    Ctx ctx;
    bool have_best = false;
    Certificate best;
    std::array<std::uint8_t, kCanonMax> best_lab{};
    std::vector<std::array<std::uint8_t, kCanonMax>> auts;
    std::array<std::uint8_t, kCanonMax> orbit_parent{};
    int path[kCanonMax] = {};
    int depth = 0;

    int find(int v) {
        while (orbit_parent[v] != v) v = orbit_parent[v] = orbit_parent[orbit_parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        orbit_parent[b] = static_cast<std::uint8_t>(a);
    }

    void handle_leaf(const Partition& p) {
        std::uint8_t lab[kCanonMax] = {};
        for (int v = 0; v < ctx.n; ++v) lab[p.color[v]] = static_cast<std::uint8_t>(v);
        int nbits = 0;
        auto words = prefix_bits(ctx, lab, ctx.n, &nbits);
        Certificate c;
        c.order = static_cast<std::uint8_t>(ctx.n);
        c.directed = ctx.directed ? 1 : 0;
        c.bits = words;
        if (!have_best || c < best) {
            have_best = true;
            best = c;
            std::copy(lab, lab + ctx.n, best_lab.begin());
        } else if (c == best) {
            std::array<std::uint8_t, kCanonMax> g{};
            for (int i = 0; i < ctx.n; ++i) g[best_lab[i]] = lab[i];
            for (int v = 0; v < ctx.n; ++v) unite(v, g[v]);
            auts.push_back(g);
        }
    }

    void recurse(const Partition& p) {
        const int n = ctx.n;
        if (have_best) {
            // Leading singleton cells force a labeling prefix.
            std::uint8_t lab[kCanonMax] = {};
            int count_in_cell[kCanonMax] = {};
            for (int v = 0; v < n; ++v) ++count_in_cell[p.color[v]];
            int len = 0;
            while (len < p.ncells && count_in_cell[len] == 1) ++len;
            for (int v = 0; v < n; ++v)
                if (p.color[v] < len) lab[p.color[v]] = static_cast<std::uint8_t>(v);
            int nbits = 0;
            auto words = prefix_bits(ctx, lab, len, &nbits);
            if (compare_bit_prefix(words, best.bits, nbits) > 0) return;
        }
        if (p.ncells == n) {
            handle_leaf(p);
            return;
        }
        // First non-singleton cell.
        int counts[kCanonMax] = {};
        for (int v = 0; v < n; ++v) ++counts[p.color[v]];
        int target = 0;
        while (counts[target] == 1) ++target;
        // Orbits under discovered automorphisms fixing the current path.
        std::uint8_t local_parent[kCanonMax];
        for (int v = 0; v < n; ++v) local_parent[v] = static_cast<std::uint8_t>(v);
        auto lfind = [&](int v) {
            while (local_parent[v] != v) v = local_parent[v] = local_parent[local_parent[v]];
            return v;
        };
        for (const auto& g : auts) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = g[path[i]] == path[i];
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = lfind(v), b = lfind(g[v]);
                if (a != b) local_parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        std::uint32_t tried = 0;
        for (int v = 0; v < n; ++v) {
            if (p.color[v] != target) continue;
            bool skip = false;
            for (std::uint32_t m = tried; m; m &= m - 1)
                if (lfind(std::countr_zero(m)) == lfind(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried |= 1u << v;
            Partition child = p;
            individualize(child, v);
            refine(ctx, child);
            path[depth++] = v;
            recurse(child);
            --depth;
        }
    }
};

CanonicalResult run_canonical(const Ctx& ctx) {
    CanonicalResult res;
    if (ctx.n < 1) throw std::invalid_argument("canonical_form: empty graph");
    Searcher s;
    s.ctx = ctx;
    for (int v = 0; v < kCanonMax; ++v) s.orbit_parent[v] = static_cast<std::uint8_t>(v);
    Partition p;
    refine(ctx, p);
    s.recurse(p);
    res.cert = s.best;
    res.canonical_label = s.best_lab;
    res.automorphisms = std::move(s.auts);
    for (int v = 0; v < ctx.n; ++v) res.orbit[v] = static_cast<std::uint8_t>(s.find(v));
    return res;
}

Ctx make_ctx(const SmallGraph& g) {
    if (g.n > kCanonMax) throw std::invalid_argument("canonical_form: order > 16");
    Ctx ctx;
    ctx.n = g.n;
    ctx.directed = false;
    for (int v = 0; v < g.n; ++v) ctx.out[v] = ctx.in[v] = g.adj[v];
    return ctx;
}

Ctx make_ctx(const SmallDigraph& d) {
    if (d.n > kCanonMax) throw std::invalid_argument("canonical_form: order > 16");
    Ctx ctx;
    ctx.n = d.n;
    ctx.directed = true;
    SmallDigraph t = d.transposed();
    for (int v = 0; v < d.n; ++v) {
        ctx.out[v] = d.out[v];
        ctx.in[v] = t.out[v];
    }
    return ctx;
}

}  // namespace

std::string Certificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(4 + 16 * bits.size());
    s.push_back(digits[order >> 4]);
    s.push_back(digits[order & 15]);
    s.push_back(directed ? 'd' : 'u');
    int total_bits = directed ? order * (order - 1) : order * (order - 1) / 2;
    int words = (total_bits + 63) / 64;
    for (int w = 0; w < words; ++w)
        for (int shift = 60; shift >= 0; shift -= 4) s.push_back(digits[(bits[w] >> shift) & 15]);
    return s;
}

CanonicalResult canonical_form(const SmallGraph& g) { return run_canonical(make_ctx(g)); }

CanonicalResult canonical_form(const SmallDigraph& d) { return run_canonical(make_ctx(d)); }

Certificate certificate(const Graph& g) {
    if (g.order() > kCanonMax) throw std::invalid_argument("certificate: order > 16");
    return canonical_form(to_small(g)).cert;
}

Certificate certificate(const Digraph& d) {
    if (d.order() > kCanonMax) throw std::invalid_argument("certificate: order > 16");
    return canonical_form(to_small(d)).cert;
}

Graph canonical_copy(const Graph& g) {
    if (g.order() > kCanonMax) throw std::invalid_argument("canonical_copy: order > 16");
    auto res = canonical_form(to_small(g));
    std::vector<int> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos) perm[res.canonical_label[pos]] = pos;
    return g.relabeled(perm);
}

Digraph canonical_copy(const Digraph& d) {
    if (d.order() > kCanonMax) throw std::invalid_argument("canonical_copy: order > 16");
    auto res = canonical_form(to_small(d));
    std::vector<int> perm(d.order());
    for (int pos = 0; pos < d.order(); ++pos) perm[res.canonical_label[pos]] = pos;
    return d.relabeled(perm);
}

}  // namespace wrad

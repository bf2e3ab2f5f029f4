#include "wrad/chords.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <stdexcept>
#include <thread>

#include "wrad/canonical.hpp"
#include "wrad/constructions.hpp"
#include "wrad/smallgraph.hpp"

namespace wrad {

namespace {

struct Poly {
    long long a2 = 0, a1 = 0, a0 = 0;
    bool operator==(const Poly&) const = default;
    bool operator<(const Poly& o) const {
        if (a2 != o.a2) return a2 < o.a2;
        if (a1 != o.a1) return a1 < o.a1;
        return a0 < o.a0;
    }
};

// All-pairs scan: Wiener plus min over vertices of ecc+ + ecc-. Returns
// false when not strongly connected.
bool analyze(const std::uint32_t* rows, int n, long long* wiener, int* doubled_radius) {
    std::uint8_t dist[kSmallMax];
    std::uint8_t mat[kSmallMax][kSmallMax];
    long long total = 0;
    int ecc_out[kSmallMax];
    for (int s = 0; s < n; ++s) {
        small_bfs(rows, n, s, dist);
        int e = 0;
        for (int v = 0; v < n; ++v) {
            if (dist[v] == kSmallUnreachable) return false;
            mat[s][v] = dist[v];
            e = std::max(e, static_cast<int>(dist[v]));
            total += dist[v];
        }
        ecc_out[s] = e;
    }
    int best = 1 << 20;
    for (int v = 0; v < n; ++v) {
        int ein = 0;
        for (int u = 0; u < n; ++u) ein = std::max(ein, static_cast<int>(mat[u][v]));
        best = std::min(best, ecc_out[v] + ein);
    }
    *wiener = total;
    *doubled_radius = best;
    return true;
}

struct SearchSpace {
    int r;
    std::vector<std::pair<int, int>> candidates;       // 1-based (from,to)
    std::uint32_t base_rows[3][kSmallMax];             // dp rows at n = 2r+1..2r+3
    int sizes[3];

    explicit SearchSpace(int r_) : r(r_) {
        for (int from = 2; from <= 2 * r - 1; ++from)
            for (int to = 1; to < from; ++to) candidates.emplace_back(from, to);
        for (int i = 0; i < 3; ++i) {
            sizes[i] = 2 * r + 1 + i;
            SmallDigraph d = to_small(dp(sizes[i], 2 * r));
            for (int v = 0; v < d.n; ++v) base_rows[i][v] = d.out[v];
        }
    }

    // Wiener polynomial of the chord set, or nullopt when some n fails the
    // radius requirement.
    std::optional<Poly> evaluate(const std::vector<int>& picked) const {
        long long w[3];
        for (int i = 0; i < 3; ++i) {
            std::uint32_t rows[kSmallMax];
            std::copy(base_rows[i], base_rows[i] + sizes[i], rows);
            for (int c : picked) rows[candidates[c].first - 1] |= 1u << (candidates[c].second - 1);
            int dr = 0;
            if (!analyze(rows, sizes[i], &w[i], &dr)) return std::nullopt;
            if (dr != 2 * r) return std::nullopt;
        }
        const long long n1 = sizes[0];
        long long d1 = w[1] - w[0], d2 = w[2] - w[1];
        if ((d2 - d1) % 2 != 0) throw std::logic_error("chord search: non-quadratic Wiener growth");
        Poly p;
        p.a2 = (d2 - d1) / 2;
        p.a1 = d1 - p.a2 * (2 * n1 + 1);
        p.a0 = w[0] - p.a2 * n1 * n1 - p.a1 * n1;
        return p;
    }
};

struct LevelBest {
    std::optional<Poly> poly;
    std::vector<std::vector<int>> argbest;  // candidate-index sets

    void offer(const Poly& p, const std::vector<int>& set) {
        if (!poly || *poly < p) {
            poly = p;
            argbest.clear();
        }
        if (p == *poly) argbest.push_back(set);
    }
    void merge(const LevelBest& o) {
        if (!o.poly) return;
        if (!poly || *poly < *o.poly) {
            poly = o.poly;
            argbest = o.argbest;
        } else if (*poly == *o.poly) {
            argbest.insert(argbest.end(), o.argbest.begin(), o.argbest.end());
        }
    }
};

// Enumerates k-subsets with a fixed first candidate index, for thread
// partitioning by first index.
void combos_from(const SearchSpace& space, int k, int first, LevelBest& best) {
    std::vector<int> picked(k);
    picked[0] = first;
    const int m = static_cast<int>(space.candidates.size());
    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == k) {
            if (auto p = space.evaluate(picked)) best.offer(*p, picked);
            return;
        }
        for (int c = start; c <= m - (k - depth); ++c) {
            picked[depth] = c;
            self(self, depth + 1, c + 1);
        }
    };
    rec(rec, 1, first + 1);
}

LevelBest best_at_level(const SearchSpace& space, int k, int threads) {
    LevelBest total;
    if (k == 0) {
        std::vector<int> none;
        if (auto p = space.evaluate(none)) total.offer(*p, none);
        return total;
    }
    const int m = static_cast<int>(space.candidates.size());
    if (threads <= 1) {
        for (int first = 0; first + k <= m; ++first) combos_from(space, k, first, total);
        return total;
    }
    std::vector<LevelBest> parts(threads);
    std::atomic<int> next_first{0};
    auto worker = [&](int t) {
        for (;;) {
            int first = next_first.fetch_add(1);
            if (first + k > m) break;
            combos_from(space, k, first, parts[t]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
    for (const auto& p : parts) total.merge(p);
    return total;
}

}  // namespace

std::vector<ChordSearchResult> chord_augmentation_search(int r, int threads) {
    if (r < 2 || r > 7) throw std::invalid_argument("chord search: r must be in [2,7]");
    if (threads < 1) threads = 1;
    SearchSpace space(r);
    const int m = static_cast<int>(space.candidates.size());

    std::optional<int> selected_k;
    LevelBest selected;
    LevelBest prev;
    bool have_prev = false;
    for (int k = 0; k <= m; ++k) {
        LevelBest cur = best_at_level(space, k, threads);
        if (have_prev) {
            if (!cur.poly || !(*prev.poly < *cur.poly)) {
                selected_k = k - 1;
                selected = prev;
                break;
            }
        }
        if (cur.poly) {
            prev = cur;
            have_prev = true;
        }
    }
    if (!selected_k) throw std::logic_error("chord search: no chord set attains the radius");

    // Deduplicate tied optima up to isomorphism (certificate at n = 2r+1).
    std::vector<std::pair<Certificate, std::vector<int>>> reps;
    for (const auto& set : selected.argbest) {
        SmallDigraph d;
        d.n = space.sizes[0];
        for (int v = 0; v < d.n; ++v) d.out[v] = space.base_rows[0][v];
        for (int c : set) d.add_arc(space.candidates[c].first - 1, space.candidates[c].second - 1);
        Certificate cert = canonical_form(d).cert;
        bool seen = false;
        for (auto& [rc, rset] : reps)
            if (rc == cert) {
                seen = true;
                if (set < rset) rset = set;
                break;
            }
        if (!seen) reps.emplace_back(cert, set);
    }

    std::vector<ChordSearchResult> out;
    for (const auto& [cert, set] : reps) {
        ChordSearchResult res;
        res.r = r;
        for (int c : set) res.chords.push_back(space.candidates[c]);
        std::sort(res.chords.begin(), res.chords.end());
        res.a2 = selected.poly->a2;
        res.a1 = selected.poly->a1;
        res.a0 = selected.poly->a0;
        res.contains_base_arc =
            std::find(res.chords.begin(), res.chords.end(), std::make_pair(2 * r - 1, r)) !=
            res.chords.end();
        res.conjectured = r >= 5;
        out.push_back(res);
    }
    std::sort(out.begin(), out.end(),
              [](const ChordSearchResult& a, const ChordSearchResult& b) { return a.chords < b.chords; });
    for (size_t i = 0; i < out.size(); ++i) out[i].rank = 1;
    return out;
}

}  // namespace wrad

#include "wrad/enumerate.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace wrad {

namespace {

constexpr int kEnumMax = 10;

struct Enumerator {
    int target;
    int shard_level;
    ShardSpec shard;
    long long level_counter = 0;
    const std::function<void(const SmallGraph&, const CanonicalResult&)>* emit;

    // g is one representative of its class; aut/orbit describe Aut(g).
    void recurse(const SmallGraph& g, const CanonicalResult& canon) {
        if (g.n == shard_level && shard.count > 1) {
            long long idx = level_counter++;
            if (idx % shard.count != shard.index) return;
        }
        if (g.n == target) {
            (*emit)(g, canon);
            return;
        }
        const int k = g.n;
        const std::uint32_t nmasks = 1u << k;

        // Orbit representatives of neighborhood subsets under Aut(g):
        // union-find over masks, one generator at a time via per-bit images.
        std::vector<std::uint32_t> parent(nmasks);
        for (std::uint32_t m = 0; m < nmasks; ++m) parent[m] = m;
        auto find = [&](std::uint32_t m) {
            while (parent[m] != m) m = parent[m] = parent[parent[m]];
            return m;
        };
        for (const auto& gperm : canon.automorphisms) {
            std::uint32_t bit_image[kEnumMax];
            for (int v = 0; v < k; ++v) bit_image[v] = 1u << gperm[v];
            std::vector<std::uint32_t> image(nmasks);
            image[0] = 0;
            for (std::uint32_t m = 1; m < nmasks; ++m)
                image[m] = image[m & (m - 1)] | bit_image[std::countr_zero(m)];
            for (std::uint32_t m = 0; m < nmasks; ++m) {
                std::uint32_t a = find(m), b = find(image[m]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }

        for (std::uint32_t mask = 0; mask < nmasks; ++mask) {
            if (find(mask) != mask) continue;  // not the orbit representative
            SmallGraph child = g;
            child.n = k + 1;
            child.adj[k] = mask;
            std::uint32_t m = mask;
            while (m) {
                child.adj[std::countr_zero(m)] |= 1u << k;
                m &= m - 1;
            }
            CanonicalResult cres = canonical_form(child);
            // Accept only when the added vertex is the canonical deletion
            // choice (up to automorphism), so each class has one parent.
            int w = cres.canonical_label[k];
            if (cres.orbit[w] == cres.orbit[k]) recurse(child, cres);
        }
    }
};

}  // namespace

void enumerate_graphs(int n, const ShardSpec& shard,
                      const std::function<void(const SmallGraph&, const CanonicalResult&)>& emit) {
    if (n < 1 || n > kEnumMax) throw std::invalid_argument("enumerate_graphs: n must be in [1,10]");
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
        throw std::invalid_argument("enumerate_graphs: invalid shard spec");
    Enumerator e;
    e.target = n;
    e.shard_level = n >= 6 ? 5 : std::max(1, n - 1);
    e.shard = shard;
    e.emit = &emit;
    SmallGraph k1;
    k1.n = 1;
    e.recurse(k1, canonical_form(k1));
}

long long count_graph_classes(int n, const std::function<bool(const SmallGraph&)>& pred) {
    long long count = 0;
    enumerate_graphs(n, ShardSpec{}, [&](const SmallGraph& g, const CanonicalResult&) {
        if (!pred || pred(g)) ++count;
    });
    return count;
}

}  // namespace wrad

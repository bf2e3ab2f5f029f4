#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wrad/smallgraph.hpp"

namespace wrad {

constexpr int kCanonMax = 16;

// Label-invariant identifier of an isomorphism class: the lexicographically
// minimal adjacency bitstring over all labelings, stored MSB-first so word
// comparison equals bitstring comparison. Graph bits are the upper triangle
// in colex pair order; digraph bits are both orientations per colex pair.
struct Certificate {
    std::uint8_t order = 0;
    std::uint8_t directed = 0;
    std::array<std::uint64_t, 4> bits{};

    auto operator<=>(const Certificate&) const = default;
    std::string hex() const;
};

struct CertificateHash {
    size_t operator()(const Certificate& c) const {
        std::uint64_t h = (static_cast<std::uint64_t>(c.order) << 1) | c.directed;
        for (std::uint64_t w : c.bits) h = h * 0x9E3779B97F4A7C15ull + w;
        return static_cast<size_t>(h);
    }
};

struct CanonicalResult {
    Certificate cert;
    // canonical_label[pos] = original vertex placed at canonical position pos
    std::array<std::uint8_t, kCanonMax> canonical_label{};
    // generators of the automorphism group, as original-vertex permutations
    std::vector<std::array<std::uint8_t, kCanonMax>> automorphisms;
    // orbit[v] = representative of v's vertex orbit under the full group
    std::array<std::uint8_t, kCanonMax> orbit{};
};

CanonicalResult canonical_form(const SmallGraph& g);
CanonicalResult canonical_form(const SmallDigraph& d);

// Wrappers for the general types; order <= kCanonMax enforced.
Certificate certificate(const Graph& g);
Certificate certificate(const Digraph& d);
Graph canonical_copy(const Graph& g);
Digraph canonical_copy(const Digraph& d);

}  // namespace wrad

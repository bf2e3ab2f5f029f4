#pragma once

#include <utility>
#include <vector>

namespace wrad {

// One optimal chord augmentation of dp(n, 2r): the chord set (1-based
// backward pairs on the cycle path), the exact Wiener polynomial
// W(n) = a2 n^2 + a1 n + a0 valid for all n >= 2r+1, and whether the set
// contains the arc u_{2r-1} -> u_r.
struct ChordSearchResult {
    int r = 0;
    std::vector<std::pair<int, int>> chords;
    long long a2 = 0;
    long long a1 = 0;
    long long a0 = 0;
    bool contains_base_arc = false;
    int rank = 1;
    bool conjectured = false;  // r >= 5: no exactness claim backs the optimum
};

// Searches chord sets over the 2r-1 cycle-path vertices of dp(n, 2r) that
// keep the radius exactly r for every n >= 2r+1, maximizing the Wiener
// polynomial (compared lexicographically by (a2, a1, a0)). Chord count k
// grows from 0 and the search stops at the first k whose best polynomial is
// not improved by k+1; all tied optima at that k are returned, deduplicated
// up to isomorphism. 2 <= r <= 7.
std::vector<ChordSearchResult> chord_augmentation_search(int r, int threads = 1);

}  // namespace wrad

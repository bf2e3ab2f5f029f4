#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wrad/canonical.hpp"
#include "wrad/constructions.hpp"
#include "wrad/metrics.hpp"

using namespace wrad;

TEST_SUITE_BEGIN("canonical");

TEST_CASE("certificates are relabeling-invariant on fixed graphs") {
    std::mt19937_64 rng(21);
    Graph c5 = cycle_graph(5);
    Certificate base = certificate(c5);
    for (int iter = 0; iter < 100; ++iter)
        CHECK(certificate(c5.relabeled(oracles::random_permutation(rng, 5))) == base);
}

TEST_CASE("non-isomorphic graphs get distinct certificates") {
    Graph p4 = path_graph(4);
    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    CHECK(certificate(p4) != certificate(star));
    CHECK(certificate(hypercube3()) != certificate(g_nrs(8, 3, 1)));
}

TEST_CASE("vertex orbits of known graphs") {
    // Q_3 is vertex-transitive.
    auto q3 = canonical_form(to_small(hypercube3()));
    for (int v = 0; v < 8; ++v) CHECK(q3.orbit[v] == q3.orbit[0]);
    // P_4: ends and middles.
    auto p4 = canonical_form(to_small(path_graph(4)));
    CHECK(p4.orbit[0] == p4.orbit[3]);
    CHECK(p4.orbit[1] == p4.orbit[2]);
    CHECK(p4.orbit[0] != p4.orbit[1]);
    // Directed cycle: transitive; its transpose is isomorphic but a single
    // arc is not.
    auto c5 = canonical_form(to_small(directed_cycle(5)));
    for (int v = 0; v < 5; ++v) CHECK(c5.orbit[v] == c5.orbit[0]);
}

TEST_CASE("canonical copy reproduces the certificate") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 9));
        Graph c = canonical_copy(g);
        CHECK(certificate(c) == certificate(g));
    }
}

TEST_CASE("soundness: permuted pairs agree, distinguished pairs differ") {
    std::mt19937_64 rng(23);
    int agree = 0;
    while (agree < 1000) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(rng, n);
        Graph h = g.relabeled(oracles::random_permutation(rng, n));
        CHECK(certificate(g) == certificate(h));
        ++agree;
    }
    // Pairs distinguished by cheap invariants must get distinct certificates.
    int differ = 0;
    while (differ < 1000) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_graph(rng, n);
        Graph h = oracles::random_graph(rng, n);
        auto inv = [](const Graph& x) {
            std::multiset<int> degs;
            for (int v = 0; v < x.order(); ++v) degs.insert(x.degree(v));
            std::multiset<int> dists;
            auto m = all_pairs(x);
            for (int u = 0; u < x.order(); ++u)
                for (int v = u + 1; v < x.order(); ++v) dists.insert(m.at(u, v));
            return std::make_pair(degs, dists);
        };
        if (inv(g) == inv(h)) continue;
        CHECK(certificate(g) != certificate(h));
        ++differ;
    }
}

TEST_CASE("digraph certificates") {
    std::mt19937_64 rng(24);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng() % 7);
        Digraph d = oracles::random_digraph(rng, n);
        Digraph h = d.relabeled(oracles::random_permutation(rng, n));
        CHECK(certificate(d) == certificate(h));
    }
    CHECK(certificate(directed_cycle(3)) != certificate(bidirected_clique(3)));
    // A 3-cycle and its reversal are isomorphic (rotate), but the 3-path
    // u->v->w differs from u<-v->w.
    Digraph out_fork(3), in_path(3);
    out_fork.add_arc(1, 0);
    out_fork.add_arc(1, 2);
    in_path.add_arc(0, 1);
    in_path.add_arc(1, 2);
    CHECK(certificate(out_fork) != certificate(in_path));
}

TEST_CASE("order cap enforced") {
    CHECK_THROWS_AS(certificate(clique(17)), std::invalid_argument);
}

TEST_SUITE_END();

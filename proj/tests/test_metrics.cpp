#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wrad/constructions.hpp"
#include "wrad/metrics.hpp"

using namespace wrad;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("bfs distances on fixed graphs") {
    auto k3 = clique(3);
    CHECK(bfs_distances(k3, 0) == std::vector<std::uint16_t>{0, 1, 1});

    auto c6 = cycle_graph(6);
    for (int s = 0; s < 6; ++s) {
        auto d = bfs_distances(c6, s);
        std::sort(d.begin(), d.end());
        CHECK(d == std::vector<std::uint16_t>{0, 1, 1, 2, 2, 3});
    }

    auto dc3 = directed_cycle(3);
    CHECK(bfs_distances(dc3, 0) == std::vector<std::uint16_t>{0, 1, 2});

    CHECK_THROWS_AS(bfs_distances(k3, 3), std::out_of_range);
}

TEST_CASE("all pairs basics") {
    auto k2 = all_pairs(clique(2));
    CHECK(k2.at(0, 0) == 0);
    CHECK(k2.at(0, 1) == 1);
    CHECK(k2.at(1, 0) == 1);

    auto single = all_pairs(Graph(1));
    CHECK(single.at(0, 0) == 0);

    auto p3 = all_pairs(path_graph(3));
    std::uint16_t mx = 0;
    for (auto d : p3.dist) mx = std::max(mx, d);
    CHECK(mx == 2);
}

TEST_CASE("wiener on fixed graphs") {
    CHECK(wiener(clique(4)) == 6);
    CHECK(wiener(cycle_graph(6)) == 27);
    CHECK(wiener(hypercube3()) == 48);
    Graph two(2);  // disconnected
    CHECK_FALSE(wiener(two).has_value());
}

TEST_CASE("wiener on fixed digraphs") {
    CHECK(wiener_digraph(bidirected_clique(3)) == 6);
    CHECK(wiener_digraph(directed_cycle(3)) == 9);
    Digraph arc(2);
    arc.add_arc(0, 1);
    CHECK_FALSE(wiener_digraph(arc).has_value());
}

TEST_CASE("eccentricities") {
    for (int n : {2, 5}) {
        auto ecc = eccentricities(clique(n));
        for (auto e : ecc) CHECK(e == 1);
    }
    auto p3 = eccentricities(path_graph(3));
    CHECK(p3 == std::vector<std::uint16_t>{2, 1, 2});

    auto dc4 = eccentricities(directed_cycle(4));
    for (int v = 0; v < 4; ++v) {
        CHECK(dc4.out[v] == 3);
        CHECK(dc4.in[v] == 3);
    }
}

TEST_CASE("radius and diameter") {
    auto c6 = radius_diameter(cycle_graph(6));
    CHECK(c6.radius == 3);
    CHECK(c6.diameter == 3);

    auto g831 = radius_diameter(g_nrs(8, 3, 1));
    CHECK(g831.radius == 3);
    CHECK(*g831.diameter <= 6);

    Graph star(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    auto s = radius_diameter(star);
    CHECK(s.radius == 1);
    CHECK(s.diameter == 2);
}

TEST_CASE("digraph radii") {
    auto bk = digraph_radii(bidirected_clique(4));
    CHECK(bk.out_radius == 1);
    CHECK(bk.in_radius == 1);
    CHECK(bk.doubled_radius == 2);

    auto c5 = digraph_radii(directed_cycle(5));
    CHECK(c5.out_radius == 4);
    CHECK(c5.in_radius == 4);
    CHECK(c5.doubled_radius == 8);

    auto seed = digraph_radii(fixed_digraph(FixedDigraph::kMinRad3Seed, 5));
    CHECK(seed.doubled_radius == 6);
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(directed_cycle(3)));
    Digraph arc(2);
    arc.add_arc(0, 1);
    CHECK_FALSE(is_strongly_connected(arc));
    CHECK(is_strongly_connected(d_nrs(8, 3, 2)));
}

TEST_CASE("wiener equals all-pairs fold and matrix is symmetric") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 9));
        auto m = all_pairs(g);
        long long total = 0;
        bool infinite = false;
        for (int u = 0; u < m.order; ++u)
            for (int v = 0; v < m.order; ++v) {
                CHECK(m.at(u, v) == m.at(v, u));
                if (u < v) {
                    if (m.at(u, v) == kUnreachable) infinite = true;
                    else total += m.at(u, v);
                }
            }
        auto w = wiener(g);
        if (infinite) CHECK_FALSE(w.has_value());
        else CHECK(w == total);
    }
}

TEST_CASE("triangle inequality and radius bounds on random connected graphs") {
    std::mt19937_64 rng(8);
    int done = 0;
    while (done < 30) {
        Graph g = oracles::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.55);
        if (!is_connected(g)) continue;
        ++done;
        auto m = all_pairs(g);
        for (int u = 0; u < m.order; ++u)
            for (int v = 0; v < m.order; ++v)
                for (int w = 0; w < m.order; ++w)
                    CHECK(m.at(u, w) <= m.at(u, v) + m.at(v, w));
        auto rd = radius_diameter(g);
        CHECK(*rd.radius <= *rd.diameter);
        CHECK(*rd.diameter <= 2 * *rd.radius);
    }
}

TEST_CASE("doubled radius equals min ecc sum; finite wiener iff strongly connected") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 60; ++iter) {
        Digraph d = oracles::random_digraph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        auto ecc = eccentricities(d);
        auto radii = digraph_radii(d);
        int best = -1;
        for (int v = 0; v < d.order(); ++v) {
            if (ecc.out[v] == kUnreachable || ecc.in[v] == kUnreachable) continue;
            int s = ecc.out[v] + ecc.in[v];
            if (best < 0 || s < best) best = s;
        }
        if (best < 0) CHECK_FALSE(radii.doubled_radius.has_value());
        else CHECK(radii.doubled_radius == best);
        CHECK(wiener_digraph(d).has_value() == is_strongly_connected(d));
    }
}

TEST_CASE("metrics invariant under relabeling") {
    std::mt19937_64 rng(10);
    Graph g = g_nrs(9, 3, 2);
    auto base = wiener(g);
    auto base_rd = radius_diameter(g);
    for (int iter = 0; iter < 100; ++iter) {
        Graph h = g.relabeled(oracles::random_permutation(rng, g.order()));
        CHECK(wiener(h) == base);
        auto rd = radius_diameter(h);
        CHECK(rd.radius == base_rd.radius);
        CHECK(rd.diameter == base_rd.diameter);
    }
    Digraph d = d_nrs(8, 3, 1);
    auto dbase = wiener_digraph(d);
    auto dradii = digraph_radii(d);
    for (int iter = 0; iter < 100; ++iter) {
        Digraph h = d.relabeled(oracles::random_permutation(rng, d.order()));
        CHECK(wiener_digraph(h) == dbase);
        auto radii = digraph_radii(h);
        CHECK(radii.out_radius == dradii.out_radius);
        CHECK(radii.in_radius == dradii.in_radius);
        CHECK(radii.doubled_radius == dradii.doubled_radius);
    }
}

TEST_CASE("complements") {
    CHECK(complement(clique(5)) == empty_graph(5));
    CHECK(complement(empty_graph(5)) == clique(5));
    // The complement of a directed 3-cycle is the reversed 3-cycle.
    CHECK(complement_digraph(directed_cycle(3)) == directed_cycle(3).transpose());
}

TEST_CASE("degrees") {
    auto k4 = degrees(clique(4));
    for (int d : k4) CHECK(d == 3);
    auto c5 = degrees(directed_cycle(5));
    for (const auto& t : c5) {
        CHECK(t.out == 1);
        CHECK(t.in == 1);
        CHECK(t.total == 2);
    }
    auto dn = degrees(d_nrs(6, 3, 1));
    long long total = 0;
    std::multiset<int> totals;
    for (const auto& t : dn) {
        total += t.total;
        totals.insert(t.total);
    }
    CHECK(total == 2 * d_nrs(6, 3, 1).arc_count());
    // Hand count from the arc rule: the two hubs see everything, the two
    // chain tails see least.
    CHECK(totals == std::multiset<int>{4, 4, 5, 5, 7, 7});
}

TEST_SUITE_END();

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wrad/canonical.hpp"
#include "wrad/constructions.hpp"
#include "wrad/formulas.hpp"
#include "wrad/metrics.hpp"

using namespace wrad;
namespace f = wrad::formulas;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("primitive generators") {
    CHECK(wiener(cycle_graph(6)) == 27);
    CHECK(wiener(hypercube3()) == 48);
    CHECK(digraph_radii(directed_cycle(4)).out_radius == 3);
    CHECK(clique(4).edge_count() == 6);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(bidirected_clique(3).arc_count() == 6);
}

TEST_CASE("blow-up on graphs") {
    Graph c4 = cycle_graph(4);
    CHECK(certificate(blow_up(c4, 2, clique(1))) == certificate(c4));
    CHECK(blow_up(cycle_graph(6), 0, clique(3)).order() == 8);

    Graph g = blow_up(cycle_graph(6), 0, empty_graph(3));
    int deg4 = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 4) ++deg4;
    CHECK(deg4 == 2);  // the two former neighbors of the blown vertex
    CHECK_THROWS_AS(blow_up(c4, 9, clique(1)), std::out_of_range);

    std::mt19937_64 rng(16);
    for (int iter = 0; iter < 30; ++iter) {
        Graph base = oracles::random_graph(rng, 3 + static_cast<int>(rng() % 5));
        Graph h = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 4));
        int v = static_cast<int>(rng() % base.order());
        Graph b = blow_up(base, v, h);
        CHECK(b.order() == base.order() - 1 + h.order());
        CHECK(b.edge_count() == base.edge_count() - base.degree(v) + h.edge_count() +
                                    static_cast<long long>(base.degree(v)) * h.order());
    }
}

TEST_CASE("blow-up on digraphs") {
    Digraph c4 = directed_cycle(4);
    CHECK(certificate(blow_up_digraph(c4, 1, Digraph(1))) == certificate(c4));

    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        Digraph d = oracles::random_digraph(rng, 3 + static_cast<int>(rng() % 5));
        Digraph h = oracles::random_digraph(rng, 1 + static_cast<int>(rng() % 4));
        int v = static_cast<int>(rng() % d.order());
        long long removed = 0;
        for (int u = 0; u < d.order(); ++u) {
            if (u == v) continue;
            removed += d.has_arc(u, v) + d.has_arc(v, u);
        }
        Digraph b = blow_up_digraph(d, v, h);
        CHECK(b.arc_count() ==
              d.arc_count() - removed + h.arc_count() +
                  static_cast<long long>(d.out_degree(v) + d.in_degree(v)) * h.order());
    }
}

TEST_CASE("g_nrs fixtures") {
    CHECK(certificate(g_nrs(6, 3, 1)) == certificate(cycle_graph(6)));
    CHECK(wiener(g_nrs(8, 3, 1)) == 48);
    CHECK(g_nrs(10, 3, 2).edge_count() == 24);
    CHECK_THROWS_AS(g_nrs(8, 3, 3), std::domain_error);  // s above (n-2r+2)/2
    CHECK_THROWS_AS(g_nrs(5, 3, 1), std::domain_error);
}

TEST_CASE("the three drawn extremal graphs at (8,3) match their families") {
    auto from_edges = [](std::initializer_list<std::pair<int, int>> edges) {
        Graph g(8);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    };
    Graph cube = from_edges({{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {1, 7}, {2, 4}, {2, 6},
                             {2, 7}, {3, 5}, {3, 6}, {3, 7}});
    Graph s2 = from_edges({{0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5}, {1, 7}, {2, 4},
                           {2, 6}, {3, 5}, {3, 6}, {3, 7}, {5, 7}});
    Graph s1 = from_edges({{0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                           {3, 5}, {3, 6}, {3, 7}, {5, 7}, {6, 7}});
    CHECK(certificate(cube) == certificate(hypercube3()));
    CHECK(certificate(s2) == certificate(g_nrs(8, 3, 2)));
    CHECK(certificate(s1) == certificate(g_nrs(8, 3, 1)));
    for (const Graph* g : {&cube, &s2, &s1}) CHECK(wiener(*g) == 48);
}

TEST_CASE("core digraph and d_nrs") {
    Digraph core = d_2r_r_1(3);
    CHECK(core.order() == 6);
    CHECK(digraph_radii(core).out_radius == 3);
    CHECK(wiener_digraph(core) == f::eq2_wiener(6, 3));
    CHECK(certificate(d_nrs(6, 3, 1)) == certificate(core));
    CHECK(digraph_radii(d_nrs(10, 4, 2)).out_radius == 4);
    CHECK(is_strongly_connected(d_nrs(10, 4, 2)));
}

TEST_CASE("dp family") {
    for (int d : {2, 3, 5}) {
        CHECK(certificate(dp(d, d)) == certificate(d == 2 ? bidirected_clique(2) : directed_cycle(d)));
    }
    CHECK(dp(12, 6).order() == 12);
    for (int n = 7; n <= 12; ++n)
        CHECK(dp(n, 6).arc_count() == (6 - 2) + 2 * (n - 6 + 1));
}

TEST_CASE("max rad construction") {
    Digraph d = max_rad_construction(20, 3);
    auto radii = digraph_radii(d);
    CHECK(radii.doubled_radius == 6);
    CHECK(*wiener_digraph(d) >= f::maxrad_construction_lower(20, 3));
    CHECK(digraph_radii(max_rad_construction(9, 1)).doubled_radius == 2);
    // Radius exactly r and Wiener at or above the chord construction's
    // lower expression across a sweep.
    for (int r = 1; r <= 4; ++r)
        for (int n = 2 * r + 1; n <= 30; n += 3) {
            Digraph dd = max_rad_construction(n, r);
            CHECK(digraph_radii(dd).doubled_radius == 2 * r);
            CHECK(*wiener_digraph(dd) >= f::maxrad_construction_lower(n, r));
        }
}

TEST_CASE("adding one vertex to the blow-up family costs (n-1)+(r-1)^2") {
    for (int r = 3; r <= 5; ++r)
        for (int n = 2 * r + 1; n <= 2 * r + 6; ++n) {
            long long w_n = *wiener(g_nrs(n, r, 1));
            long long w_prev = *wiener(g_nrs(n - 1, r, 1));
            CHECK(w_n - w_prev == (n - 1) + (r - 1) * (r - 1));
            long long dw_n = *wiener_digraph(d_nrs(n, r, 1));
            long long dw_prev = *wiener_digraph(d_nrs(n - 1, r, 1));
            CHECK(dw_n - dw_prev == 2 * (n - 1) + (r - 1) * (r - 1));
        }
}

TEST_CASE("min rad construction radius and gap constancy") {
    CHECK(digraph_radii(min_rad_construction(20, 6)).doubled_radius == 6);
    CHECK(digraph_radii(min_rad_construction(20, 7)).doubled_radius == 7);
    CHECK(digraph_radii(min_rad_construction(12, 5)).doubled_radius == 5);
    long long gap = 0;
    for (int n = 15; n <= 25; ++n) {
        long long w = *wiener_digraph(min_rad_construction(n, 6));
        long long g = w - 2 * f::binom2(n) - 6 * n;
        if (n == 15) gap = g;
        CHECK(g == gap);
    }
    CHECK_THROWS_AS(min_rad_construction(20, 4), std::domain_error);
}

TEST_CASE("radius-2 and radius-3/2 complements") {
    Digraph two_triangles = min_rad2_digraph(6, {3, 3});
    CHECK(wiener_digraph(two_triangles) == 36);
    CHECK(digraph_radii(two_triangles).doubled_radius == 4);

    Digraph one_square = min_rad2_digraph(4, {4});
    CHECK(wiener_digraph(one_square) == 16);
    CHECK(digraph_radii(one_square).doubled_radius == 4);

    Digraph matching = matching_complement_digraph(6);
    CHECK(wiener_digraph(matching) == 33);
    CHECK(digraph_radii(matching).doubled_radius == 3);
    Digraph matching5 = matching_complement_digraph(5);
    CHECK(wiener_digraph(matching5) == 2 * f::binom2(5) + 3);
    CHECK(digraph_radii(matching5).doubled_radius == 3);

    CHECK_THROWS_AS(min_rad2_digraph(6, {3, 2}), std::domain_error);
    CHECK_THROWS_AS(min_rad2_digraph(4, {3, 1}), std::domain_error);
}

TEST_CASE("seed topology beats the cycle blow-up at n=20") {
    Digraph seed = fixed_digraph(FixedDigraph::kMinRad3Seed, 20);
    Digraph cyc = min_rad_construction(20, 6);
    CHECK(digraph_radii(seed).doubled_radius == 6);
    CHECK(*wiener_digraph(seed) < *wiener_digraph(cyc));
}

TEST_CASE("out-radius-1 extremal topologies") {
    for (auto which : {FixedDigraph::kMaxOutrad1Chain, FixedDigraph::kMaxOutrad1Fork}) {
        Digraph d = fixed_digraph(which, 8);
        CHECK(wiener_digraph(d) == 168);
        CHECK(digraph_radii(d).out_radius == 1);
    }
    // The two variants are distinct classes already at n = 4.
    CHECK(certificate(fixed_digraph(FixedDigraph::kMaxOutrad1Chain, 4)) !=
          certificate(fixed_digraph(FixedDigraph::kMaxOutrad1Fork, 4)));
}

TEST_CASE("long-Wiener out-radius family at (20,3)") {
    Digraph d = max_outradius_family(20, 3);
    CHECK(wiener_digraph(d) == f::maxradplus_construction_wiener(20, 3));
    auto m = all_pairs(d);
    // d(v_a, u) + d(u, v_a) = n - pr for u after v_a (hub counts as last).
    for (int p = 0; p < 6; ++p)
        for (int i = 1; i <= 3; ++i) {
            int a = 3 * p + i - 1;
            for (int j = a + 1; j < 19; ++j) CHECK(m.at(a, j) + m.at(j, a) == 20 - 3 * p);
            CHECK(m.at(a, 19) + m.at(19, a) == 20 - 3 * p);
        }
}

TEST_CASE("construction registry") {
    ConstructionSpec spec;
    spec.family = "gnrs";
    spec.n = 8;
    spec.r = 3;
    spec.s = 1;
    auto built = build_construction(spec);
    REQUIRE(built.graph.has_value());
    CHECK(wiener(*built.graph) == 48);

    spec.family = "nonsense";
    CHECK_THROWS_AS(build_construction(spec), std::domain_error);

    ConstructionSpec missing;
    missing.family = "gnrs";
    CHECK_THROWS_AS(build_construction(missing), std::domain_error);
}

TEST_SUITE_END();

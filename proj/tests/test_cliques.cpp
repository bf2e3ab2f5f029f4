#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wrad/cliques.hpp"
#include "wrad/constructions.hpp"

using namespace wrad;

TEST_SUITE_BEGIN("cliques");

TEST_CASE("clique number on fixed graphs") {
    CHECK(clique_number(clique(5)) == 5);
    CHECK(clique_number(cycle_graph(6)) == 2);
    CHECK(clique_number(hypercube3()) == 2);  // bipartite
    CHECK(clique_number(Graph(1)) == 1);
    CHECK_THROWS_AS(clique_number(Graph(65)), std::invalid_argument);
}

TEST_CASE("clique number matches subset brute force") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = oracles::random_graph(rng, 3 + static_cast<int>(rng() % 7));
        CHECK(clique_number(g) == oracles::brute_clique_number(g));
    }
}

TEST_CASE("greedy clique fixed cases") {
    auto all5 = greedy_degree_clique(clique(5), 4);
    CHECK(all5 == std::vector<int>{0, 1, 2, 3, 4});

    // Loop trace on the Petersen graph, min degree 3: S is everything,
    // vertex 0 is taken first, then 1; N(0) and N(1) only meet in {0,1}.
    auto pet = greedy_degree_clique(oracles::petersen(), 3);
    CHECK(pet == std::vector<int>{0, 1});

    CHECK(greedy_degree_clique(cycle_graph(6), 5).empty());
}

TEST_CASE("greedy clique output is a clique and meets the size bound") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = oracles::random_graph(rng, n, 0.6);
        int min_degree = static_cast<int>(rng() % n);
        auto t = greedy_degree_clique(g, min_degree);
        for (size_t a = 0; a < t.size(); ++a) {
            CHECK(g.degree(t[a]) >= min_degree);
            for (size_t b = a + 1; b < t.size(); ++b) CHECK(g.has_edge(t[a], t[b]));
        }
        long long s = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= min_degree) ++s;
        if (min_degree < n) {
            long long bound = (s + (n - min_degree) - 1) / (n - min_degree);
            CHECK(static_cast<long long>(t.size()) >= bound);
        }
    }
}

TEST_SUITE_END();

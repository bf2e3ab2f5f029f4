#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wrad/codec.hpp"
#include "wrad/constructions.hpp"
#include "wrad/metrics.hpp"

using namespace wrad;

TEST_SUITE_BEGIN("codec");

TEST_CASE("graph6 fixed vectors") {
    CHECK(encode_graph6(clique(2)) == "A_");
    CHECK(encode_graph6(empty_graph(2)) == "A?");
    CHECK(parse_graph6("A_") == clique(2));
    CHECK(parse_graph6("A?") == empty_graph(2));
}

TEST_CASE("digraph6 fixed vector") {
    Digraph arc(2);
    arc.add_arc(0, 1);
    CHECK(encode_digraph6(arc) == "&AO");
    CHECK(parse_digraph6("&AO") == arc);
}

TEST_CASE("matches the reference encoder") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 15));
        CHECK(encode_graph6(g) == oracles::reference_graph6(g));
        Digraph d = oracles::random_digraph(rng, 1 + static_cast<int>(rng() % 15));
        CHECK(encode_digraph6(d) == oracles::reference_digraph6(d));
    }
    // Long-form order headers.
    Graph big = path_graph(100);
    CHECK(encode_graph6(big) == oracles::reference_graph6(big));
    CHECK(parse_graph6(encode_graph6(big)) == big);
    Digraph bigd = directed_cycle(70);
    CHECK(encode_digraph6(bigd) == oracles::reference_digraph6(bigd));
    CHECK(parse_digraph6(encode_digraph6(bigd)) == bigd);
}

TEST_CASE("roundtrip identity on seeded random instances") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 10000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = oracles::random_graph(rng, n);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
    for (int iter = 0; iter < 10000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 20);
        Digraph d = oracles::random_digraph(rng, n);
        CHECK(parse_digraph6(encode_digraph6(d)) == d);
    }
}

TEST_CASE("composition with metrics") {
    Digraph c3 = parse_digraph6(encode_digraph6(directed_cycle(3)));
    CHECK(wiener_digraph(c3) == 9);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);        // missing data byte
    CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);      // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A\x1f"), std::invalid_argument);    // byte out of range
    CHECK_THROWS_AS(parse_graph6("AO"), std::invalid_argument);       // nonzero padding
    CHECK_THROWS_AS(parse_digraph6("AO"), std::invalid_argument);     // missing '&'
    CHECK_THROWS_AS(parse_digraph6("&A"), std::invalid_argument);     // length mismatch
}

TEST_CASE("json edges roundtrip and metadata") {
    Graph c4 = cycle_graph(4);
    auto text = write_json_edges(c4);
    auto decoded = read_json_edges(text);
    CHECK_FALSE(decoded.directed);
    CHECK(*decoded.graph == c4);

    nlohmann::json params = {{"n", 6}, {"r", 3}, {"s", 1}};
    auto dtext = write_json_edges(d_nrs(6, 3, 1), "dnrs", params);
    auto ddec = read_json_edges(dtext);
    CHECK(ddec.directed);
    CHECK(ddec.family == "dnrs");
    CHECK(ddec.params["r"] == 3);
    CHECK(*ddec.digraph == d_nrs(6, 3, 1));

    // Edges are sorted lexicographically.
    auto j = nlohmann::json::parse(text);
    auto edges = j["edges"];
    for (size_t i = 1; i < edges.size(); ++i) {
        auto a = edges[i - 1], b = edges[i];
        CHECK((a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])));
    }
}

TEST_CASE("json edges rejects bad input") {
    CHECK_THROWS(read_json_edges(R"({"order":3,"directed":false,"edges":[[0,0]]})"));
    CHECK_THROWS(read_json_edges(R"({"order":3,"directed":false,"edges":[[0,1],[0,1]]})"));
    CHECK_THROWS(read_json_edges(R"({"order":3,"directed":false,"edges":[[0,3]]})"));
}

TEST_SUITE_END();

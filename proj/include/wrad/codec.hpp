#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wrad/bitgraph.hpp"

namespace wrad {

// graph6 / digraph6 text formats (printable bytes 63..126, 6 bits per byte,
// most-significant bit first, zero padding). graph6 packs the upper-triangle
// bits x(0,1), x(0,2), x(1,2), x(0,3), ...; digraph6 is '&' followed by all
// n*n adjacency bits row-major. Long n encodings are supported for n > 62.
std::string encode_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

std::string encode_digraph6(const Digraph& d);
Digraph parse_digraph6(const std::string& text);

// JSON edge-list interchange for reports:
//   {"schema_version":1,"order":n,"directed":bool,"edges":[[u,v],...],
//    "family":...,"params":{...}}
// Edges are sorted lexicographically. Parsing rejects self-loops, duplicate
// edges and vertex indices >= order.
std::string write_json_edges(const Graph& g, const std::string& family = "",
                             const nlohmann::json& params = nlohmann::json::object());
std::string write_json_edges(const Digraph& d, const std::string& family = "",
                             const nlohmann::json& params = nlohmann::json::object());

struct DecodedJson {
    bool directed = false;
    std::optional<Graph> graph;
    std::optional<Digraph> digraph;
    std::string family;
    nlohmann::json params;
};
DecodedJson read_json_edges(const std::string& text);

}  // namespace wrad

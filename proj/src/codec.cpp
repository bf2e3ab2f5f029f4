#include "wrad/codec.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace wrad {

namespace {

constexpr int kBias = 63;

void append_number(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

// Reads N(n) starting at pos; advances pos past it.
long long parse_number(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated header");
        int c = static_cast<unsigned char>(s[i]);
        if (c < kBias || c > 126) throw std::invalid_argument("graph6: byte out of range 63..126");
        return c;
    };
    int c0 = byte(pos);
    if (c0 != 126) {
        ++pos;
        return c0 - kBias;
    }
    if (byte(pos + 1) != 126) {
        long long n = 0;
        for (size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | (byte(i) - kBias);
        pos += 4;
        return n;
    }
    long long n = 0;
    for (size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | (byte(i) - kBias);
    pos += 8;
    return n;
}

struct BitWriter {
    std::string& out;
    int filled = 0;
    int current = 0;

    void push(bool bit) {
        current = (current << 1) | (bit ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(current + kBias));
            filled = 0;
            current = 0;
        }
    }
    void finish() {
        if (filled) {
            current <<= (6 - filled);
            out.push_back(static_cast<char>(current + kBias));
            filled = 0;
            current = 0;
        }
    }
};

struct BitReader {
    const std::string& s;
    size_t pos;
    int remaining_in_byte = 0;
    int current = 0;

    bool next() {
        if (remaining_in_byte == 0) {
            if (pos >= s.size()) throw std::invalid_argument("graph6: data too short");
            int c = static_cast<unsigned char>(s[pos++]);
            if (c < kBias || c > 126) throw std::invalid_argument("graph6: byte out of range 63..126");
            current = c - kBias;
            remaining_in_byte = 6;
        }
        --remaining_in_byte;
        return (current >> remaining_in_byte) & 1;
    }
    void finish(const char* what) {
        // Remaining pad bits must be zero and no bytes may follow.
        while (remaining_in_byte > 0) {
            --remaining_in_byte;
            if ((current >> remaining_in_byte) & 1)
                throw std::invalid_argument(std::string(what) + ": nonzero padding bits");
        }
        if (pos != s.size()) throw std::invalid_argument(std::string(what) + ": trailing garbage");
    }
};

template <typename EdgeAdder>
void decode_edges(const std::string& text, size_t pos, long long n, long long nbits, EdgeAdder add,
                  const char* what) {
    size_t expected = (static_cast<size_t>(nbits) + 5) / 6;
    if (text.size() - pos != expected) throw std::invalid_argument(std::string(what) + ": malformed length");
    BitReader r{text, pos};
    add(r, n);
    r.finish(what);
}

nlohmann::json edges_json(const std::vector<std::pair<int, int>>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [u, v] : edges) arr.push_back(nlohmann::json::array({u, v}));
    return arr;
}

nlohmann::json json_header(int order, bool directed, const std::string& family,
                           const nlohmann::json& params) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["order"] = order;
    j["directed"] = directed;
    if (!family.empty()) j["family"] = family;
    if (!params.is_null() && !(params.is_object() && params.empty())) j["params"] = params;
    return j;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_number(out, n);
    BitWriter w{out};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) w.push(g.has_edge(i, j));
    w.finish();
    return out;
}

Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    long long n = parse_number(text, pos);
    if (n < 1 || n > Graph::kMaxOrder) throw std::invalid_argument("graph6: order out of range");
    Graph g(static_cast<int>(n));
    decode_edges(
        text, pos, n, n * (n - 1) / 2,
        [&](BitReader& r, long long order) {
            for (int j = 1; j < order; ++j)
                for (int i = 0; i < j; ++i)
                    if (r.next()) g.add_edge(i, j);
        },
        "graph6");
    return g;
}

std::string encode_digraph6(const Digraph& d) {
    const int n = d.order();
    std::string out = "&";
    append_number(out, n);
    BitWriter w{out};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.push(i != j && d.has_arc(i, j));
    w.finish();
    return out;
}

Digraph parse_digraph6(const std::string& text) {
    if (text.empty() || text[0] != '&') throw std::invalid_argument("digraph6: missing '&' header");
    size_t pos = 1;
    long long n = parse_number(text, pos);
    if (n < 1 || n > Digraph::kMaxOrder) throw std::invalid_argument("digraph6: order out of range");
    Digraph d(static_cast<int>(n));
    decode_edges(
        text, pos, n, n * n,
        [&](BitReader& r, long long order) {
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) {
                    bool bit = r.next();
                    if (!bit) continue;
                    if (i == j) throw std::invalid_argument("digraph6: self-loop bit set");
                    d.add_arc(i, j);
                }
        },
        "digraph6");
    return d;
}

std::string write_json_edges(const Graph& g, const std::string& family, const nlohmann::json& params) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    nlohmann::json j = json_header(g.order(), false, family, params);
    j["edges"] = edges_json(edges);
    return j.dump();
}

std::string write_json_edges(const Digraph& d, const std::string& family, const nlohmann::json& params) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < d.order(); ++u)
        for (int v : d.out_neighbors(u)) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    nlohmann::json j = json_header(d.order(), true, family, params);
    j["edges"] = edges_json(edges);
    return j.dump();
}

DecodedJson read_json_edges(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DecodedJson out;
    int order = j.at("order").get<int>();
    out.directed = j.at("directed").get<bool>();
    if (j.contains("family")) out.family = j["family"].get<std::string>();
    if (j.contains("params")) out.params = j["params"];
    if (order < 1) throw std::invalid_argument("json edges: order must be positive");

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("json edges: edge must be a pair");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u == v) throw std::invalid_argument("json edges: self-loop rejected");
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("json edges: vertex index >= order");
        edges.emplace_back(u, v);
    }
    if (out.directed) {
        Digraph d(order);
        for (auto [u, v] : edges) {
            if (d.has_arc(u, v)) throw std::invalid_argument("json edges: duplicate edge");
            d.add_arc(u, v);
        }
        out.digraph = std::move(d);
    } else {
        Graph g(order);
        for (auto [u, v] : edges) {
            if (g.has_edge(u, v)) throw std::invalid_argument("json edges: duplicate edge");
            g.add_edge(u, v);
        }
        out.graph = std::move(g);
    }
    return out;
}

}  // namespace wrad

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrad {

// Simple undirected graph on up to kMaxOrder vertices, stored as symmetric
// adjacency bit rows (64-bit words). No self-loops, no multi-edges.
class Graph {
public:
    static constexpr int kMaxOrder = 4096;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [1," +
                                        std::to_string(kMaxOrder) + "], got " + std::to_string(n));
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
    }

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        set_bit(u, v);
        set_bit(v, u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        clear_bit(u, v);
        clear_bit(v, u);
    }

    int degree(int v) const;
    long long edge_count() const;
    std::vector<int> neighbors(int v) const;

    // Relabels vertices: vertex v of the result is perm[v] of the original.
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }
    void set_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63); }
    void clear_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63)); }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// Directed graph stored as out-adjacency bit rows. Zero diagonal enforced.
class Digraph {
public:
    static constexpr int kMaxOrder = 4096;

    explicit Digraph(int n) : n_(n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("Digraph: order must be in [1," +
                                        std::to_string(kMaxOrder) + "], got " + std::to_string(n));
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
    }

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    const std::uint64_t* out_row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (out_row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Digraph: self-loop rejected");
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    }

    void remove_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    }

    int out_degree(int v) const;
    int in_degree(int v) const;
    long long arc_count() const;
    std::vector<int> out_neighbors(int v) const;

    // Digraph with every arc reversed.
    Digraph transpose() const;

    Digraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Digraph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// Complement within the simple-graph / bidirected-clique universe.
Graph complement(const Graph& g);
Digraph complement_digraph(const Digraph& d);

struct DegreeTriple {
    int out;
    int in;
    int total;
};

std::vector<int> degrees(const Graph& g);
std::vector<DegreeTriple> degrees(const Digraph& d);

}  // namespace wrad

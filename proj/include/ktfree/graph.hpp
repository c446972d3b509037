#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ktfree {

using Vertex = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free vertex ids. Compares lexicographically.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
    explicit VertexSet(std::vector<Vertex> ids);

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    bool contains(Vertex v) const;
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);  // a subset of b

// Sorted, duplicate-free canonical edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}
    explicit EdgeSet(std::vector<Edge> edges);

    bool empty() const { return edges_.empty(); }
    std::size_t size() const { return edges_.size(); }
    bool contains(const Edge& e) const;
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

// Square bit matrix over vertex ids; one row of 64-bit words per vertex.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n);

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }
    bool test(Vertex u, Vertex v) const;
    void add(Vertex u, Vertex v);
    void remove(Vertex u, Vertex v);
    const std::uint64_t* row(Vertex v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Simple undirected graph on vertex ids 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);  // dedups; rejects out-of-range endpoints

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }  // canonical order
    bool adjacent(Vertex u, Vertex v) const;
    const AdjacencyMatrix& adjacency() const { return adj_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    AdjacencyMatrix adj_;
};

// Raised on malformed graph files; what() names the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Raised when an internal consistency check fails (a bug, not bad input).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& message) : std::logic_error(message) {}
};

// Text format: header `p edge <n> <m>`, edge lines `e <u> <v>` (1-indexed),
// comment lines starting with `c`. Duplicate edge lines collapse.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// All unordered pairs over X. Requires |X| >= 2.
EdgeSet edge_set_of(const VertexSet& x);

// Every vertex set of size t inducing a complete subgraph, each exactly once,
// in lexicographic order. Requires t >= 2.
std::vector<VertexSet> enumerate_t_cliques(const Graph& g, int t);

// Lexicographically first t-clique, or none. Requires t >= 2.
std::optional<VertexSet> first_t_clique(const AdjacencyMatrix& adj, int t);

Graph remove_edges(const Graph& g, const EdgeSet& s);
Graph complete_graph(int n);

}  // namespace ktfree

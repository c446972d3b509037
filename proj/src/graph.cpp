#include "ktfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ktfree {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

AdjacencyMatrix::AdjacencyMatrix(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

bool AdjacencyMatrix::test(Vertex u, Vertex v) const {
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void AdjacencyMatrix::add(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void AdjacencyMatrix::remove(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) adj_.add(e.u, e.v);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_.test(u, v);
}

parse_error::parse_error(int line, const std::string& message)
    : std::runtime_error(message + " at line " + std::to_string(line)), line_(line) {}

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (n < 0) {
            if (tag != "p") throw parse_error(line_no, "expected header 'p edge <n> <m>'");
            std::string kind;
            long long nn = -1, mm = -1;
            std::string extra;
            if (!(ls >> kind >> nn >> mm) || kind != "edge" || nn < 0 || mm < 0 || (ls >> extra))
                throw parse_error(line_no, "malformed header");
            n = static_cast<int>(nn);
        } else if (tag == "e") {
            long long a = 0, b = 0;
            std::string extra;
            if (!(ls >> a >> b) || (ls >> extra))
                throw parse_error(line_no, "malformed edge line");
            if (a == b) throw parse_error(line_no, "self-loop");
            if (a < 1 || a > n || b < 1 || b > n)
                throw parse_error(line_no, "vertex id out of range");
            edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        } else if (tag == "p") {
            throw parse_error(line_no, "duplicate header");
        } else {
            throw parse_error(line_no, "unrecognized line type '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error(1, "missing header");
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

EdgeSet edge_set_of(const VertexSet& x) {
    if (x.size() < 2) throw std::invalid_argument("edge_set_of requires at least two vertices");
    std::vector<Edge> out;
    out.reserve(x.size() * (x.size() - 1) / 2);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) out.emplace_back(x[i], x[j]);
    return EdgeSet(std::move(out));
}

namespace {

// Candidate masks hold vertex ids greater than the last chosen vertex that are
// adjacent to every chosen vertex; extending in ascending id order yields each
// clique exactly once, in lexicographic order.
struct CliqueSearch {
    const AdjacencyMatrix& adj;
    int t;
    int words;
    std::vector<Vertex> clique;
    std::vector<std::uint64_t> masks;  // one row per recursion depth
    std::vector<VertexSet>* out;       // null: stop at first clique
    std::optional<VertexSet> first;

    CliqueSearch(const AdjacencyMatrix& a, int t_, std::vector<VertexSet>* sink)
        : adj(a), t(t_), words(a.words_per_row()), out(sink) {
        masks.resize(static_cast<std::size_t>(words) * (t + 1));
    }

    std::uint64_t* mask(int depth) { return masks.data() + static_cast<std::size_t>(words) * depth; }

    bool extend(int depth) {
        const std::uint64_t* cand = mask(depth);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const Vertex v = w * 64 + b;
                clique.push_back(v);
                if (static_cast<int>(clique.size()) == t) {
                    if (out) {
                        out->emplace_back(clique);
                    } else {
                        first = VertexSet(clique);
                        clique.pop_back();
                        return true;
                    }
                } else {
                    std::uint64_t* next = mask(depth + 1);
                    const std::uint64_t* row = adj.row(v);
                    for (int i = 0; i < words; ++i) next[i] = cand[i] & row[i];
                    // drop ids <= v
                    for (int i = 0; i < w; ++i) next[i] = 0;
                    next[w] &= ~((b == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1));
                    if (extend(depth + 1)) {
                        clique.pop_back();
                        return true;
                    }
                }
                clique.pop_back();
            }
        }
        return false;
    }

    void seed_all_vertices() {
        std::uint64_t* m = mask(0);
        const int n = adj.vertex_count();
        for (Vertex v = 0; v < n; ++v) m[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
};

}  // namespace

std::vector<VertexSet> enumerate_t_cliques(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("clique size must be >= 2");
    std::vector<VertexSet> out;
    if (t > g.vertex_count()) return out;
    CliqueSearch search(g.adjacency(), t, &out);
    search.seed_all_vertices();
    search.extend(0);
    return out;
}

std::optional<VertexSet> first_t_clique(const AdjacencyMatrix& adj, int t) {
    if (t < 2) throw std::invalid_argument("clique size must be >= 2");
    if (t > adj.vertex_count()) return std::nullopt;
    CliqueSearch search(adj, t, nullptr);
    search.seed_all_vertices();
    search.extend(0);
    return search.first;
}

Graph remove_edges(const Graph& g, const EdgeSet& s) {
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        if (!s.contains(e)) kept.push_back(e);
    return Graph(g.vertex_count(), std::move(kept));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace ktfree

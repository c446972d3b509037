#include <doctest.h>

#include "ktfree/graph.hpp"
#include "ktfree/random.hpp"
#include "oracles.hpp"

using namespace ktfree;

TEST_CASE("edges canonicalize their endpoints") {
    CHECK(Edge(5, 2) == Edge(2, 5));
    CHECK(Edge(2, 5).u == 2);
    CHECK(Edge(2, 5).v == 5);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
}

TEST_CASE("vertex sets sort and dedup") {
    const VertexSet s({3, 1, 3, 2, 1});
    CHECK(s == VertexSet({1, 2, 3}));
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK(set_union(VertexSet{1, 3}, VertexSet{2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_intersection(VertexSet{1, 3}, VertexSet{2, 3}) == VertexSet{3});
    CHECK(set_difference(VertexSet{1, 2, 3}, VertexSet{2}) == VertexSet{1, 3});
    CHECK(is_subset(VertexSet{1, 3}, VertexSet{1, 2, 3}));
    CHECK(!is_subset(VertexSet{1, 4}, VertexSet{1, 2, 3}));
    CHECK(is_subset(VertexSet{}, VertexSet{1}));
}

TEST_CASE("parse_graph reads the edge-list format") {
    const Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("parse_graph handles isolated vertices and comments") {
    const Graph g = parse_graph("c empty\np edge 2 0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    CHECK(!g.adjacent(0, 1));
}

TEST_CASE("duplicate edge lines collapse") {
    const Graph g = parse_graph("p edge 3 4\ne 1 2\ne 2 1\ne 1 2\ne 2 3\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse errors name the offending line") {
    CHECK_THROWS_WITH_AS(parse_graph("p edge 3 1\ne 1 1\n"), "self-loop at line 2", parse_error);
    try {
        parse_graph("p edge 3 1\nc fine\ne 2 2\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("p vertex 3 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 0 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\nq 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\np edge 3 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1\n"), parse_error);
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const int n = static_cast<int>(rng.below(12));
        const Graph g = random_graph(n, 0.4, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    CHECK(serialize_graph(Graph(0)) == "p edge 0 0\n");
}

TEST_CASE("edge_set_of lists all pairs") {
    CHECK(edge_set_of(VertexSet{0, 1}) == EdgeSet{Edge(0, 1)});
    CHECK(edge_set_of(VertexSet{0, 1, 2}) == EdgeSet{Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    CHECK(edge_set_of(VertexSet{2, 5, 7, 9}).size() == 6);
    CHECK_THROWS_AS(edge_set_of(VertexSet{3}), std::invalid_argument);
    CHECK_THROWS_AS(edge_set_of(VertexSet{}), std::invalid_argument);
}

TEST_CASE("t-clique enumeration on fixed graphs") {
    const std::vector<VertexSet> triangles = enumerate_t_cliques(complete_graph(4), 3);
    REQUIRE(triangles.size() == 4);
    CHECK(triangles[0] == VertexSet{0, 1, 2});
    CHECK(triangles[1] == VertexSet{0, 1, 3});
    CHECK(triangles[2] == VertexSet{0, 2, 3});
    CHECK(triangles[3] == VertexSet{1, 2, 3});

    CHECK(enumerate_t_cliques(oracle::cycle_graph(5), 3).empty());
    CHECK(enumerate_t_cliques(complete_graph(5), 4).size() == 5);
    CHECK(enumerate_t_cliques(complete_graph(3), 2).size() == 3);
    CHECK(enumerate_t_cliques(Graph(0), 3).empty());
    CHECK_THROWS_AS(enumerate_t_cliques(Graph(3), 1), std::invalid_argument);
}

TEST_CASE("t-clique enumeration matches the check-all-subsets oracle") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_graph(8, 0.6, rng);
        for (int t : {3, 4}) {
            const auto fast = enumerate_t_cliques(g, t);
            const auto naive = oracle::naive_t_cliques(g, t);
            CHECK(fast == naive);
            // every listed set really is a clique, and the order is canonical
            for (std::size_t c = 0; c < fast.size(); ++c) {
                for (const Edge& e : edge_set_of(fast[c])) CHECK(g.adjacent(e.u, e.v));
                if (c > 0) CHECK(fast[c - 1] < fast[c]);
            }
        }
    }
}

TEST_CASE("first_t_clique returns the lexicographically smallest clique") {
    const Graph g = complete_graph(4);
    auto c = first_t_clique(g.adjacency(), 3);
    REQUIRE(c.has_value());
    CHECK(*c == VertexSet{0, 1, 2});
    CHECK(!first_t_clique(oracle::cycle_graph(5).adjacency(), 3).has_value());
}

TEST_CASE("remove_edges drops exactly the given edges") {
    const Graph g = complete_graph(4);
    const Graph h = remove_edges(g, EdgeSet{Edge(0, 1), Edge(2, 3)});
    CHECK(h.edge_count() == 4);
    CHECK(!h.adjacent(0, 1));
    CHECK(!h.adjacent(2, 3));
    CHECK(h.adjacent(0, 2));
}

TEST_CASE("graph construction rejects out-of-range endpoints") {
    CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {Edge(-1, 1)}), std::invalid_argument);
}

#pragma once

// Test-only reference implementations. Everything here recomputes results
// from definitions, independently of the library code paths under test.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ktfree/graph.hpp"
#include "ktfree/hitting_set.hpp"
#include "ktfree/random.hpp"

namespace oracle {

using namespace ktfree;

// Calls fn with every size-r index combination of [0, n), lexicographically.
inline void for_each_combination(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - r + pos) --pos;
        if (pos < 0) return;
        ++idx[pos];
        for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// Check-all-subsets clique enumeration.
inline std::vector<VertexSet> naive_t_cliques(const Graph& g, int t) {
    std::vector<VertexSet> out;
    for_each_combination(g.vertex_count(), t, [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (!g.adjacent(idx[i], idx[j])) return;
        out.emplace_back(std::vector<Vertex>(idx.begin(), idx.end()));
    });
    return out;
}

inline std::vector<Edge> universe_edges(const SetFamily& family) {
    std::set<Edge> uni;
    for (const auto& member : family)
        for (std::size_t i = 0; i < member.size(); ++i)
            for (std::size_t j = i + 1; j < member.size(); ++j)
                uni.emplace(member[i], member[j]);
    return {uni.begin(), uni.end()};
}

// Definitional hitting check, written from scratch.
inline bool hits_every_member(const std::vector<Edge>& chosen, const SetFamily& family) {
    for (const auto& member : family) {
        bool hit = false;
        for (const Edge& e : chosen) {
            bool u_in = false, v_in = false;
            for (Vertex w : member) {
                u_in |= w == e.u;
                v_in |= w == e.v;
            }
            if (u_in && v_in) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

// Full enumeration of all universe subsets of size <= budget.
inline std::optional<std::vector<Edge>> exhaustive_hitting_set(const SetFamily& family, int budget) {
    const std::vector<Edge> uni = universe_edges(family);
    std::optional<std::vector<Edge>> found;
    for (int size = 0; size <= budget && !found; ++size) {
        for_each_combination(static_cast<int>(uni.size()), size, [&](const std::vector<int>& idx) {
            if (found) return;
            std::vector<Edge> chosen;
            for (int i : idx) chosen.push_back(uni[i]);
            if (hits_every_member(chosen, family)) found = chosen;
        });
    }
    return found;
}

// Deletion-set predicate straight from the definition: remove, then look for
// any remaining t-clique.
inline bool is_deletion_set(const Graph& g, const EdgeSet& s, int t) {
    return !first_t_clique(remove_edges(g, s).adjacency(), t).has_value();
}

// Book graph: spine edge (0,1) plus `pages` vertices adjacent to both ends.
inline Graph book_graph(int pages) {
    std::vector<Edge> edges{{0, 1}};
    for (int i = 0; i < pages; ++i) {
        edges.emplace_back(0, 2 + i);
        edges.emplace_back(1, 2 + i);
    }
    return Graph(2 + pages, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

// Distinct random sets of size 1..max_size over [0, universe).
inline std::vector<VertexSet> random_distinct_sets(int count, int max_size, int universe, Rng& rng) {
    std::set<VertexSet> sets;
    while (static_cast<int>(sets.size()) < count) {
        const int size = 1 + static_cast<int>(rng.below(max_size));
        std::vector<Vertex> ids;
        while (static_cast<int>(ids.size()) < size) {
            const Vertex v = static_cast<Vertex>(rng.below(universe));
            bool seen = false;
            for (Vertex w : ids) seen |= w == v;
            if (!seen) ids.push_back(v);
        }
        sets.insert(VertexSet(std::move(ids)));
    }
    return {sets.begin(), sets.end()};
}

}  // namespace oracle

#pragma once

#include <optional>
#include <vector>

#include "ktfree/graph.hpp"

namespace ktfree {

// Deduplicated collection of vertex sets, kept in lexicographic order.
// Each member X stands for the edge set over X, so members need |X| >= 2.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<VertexSet> members);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const VertexSet& x) const;
    const std::vector<VertexSet>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    void insert(VertexSet x);       // no-op if already present
    void erase(const VertexSet& x); // no-op if absent

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::vector<VertexSet> members_;
};

struct Sunflower {
    std::vector<VertexSet> petals;
    VertexSet core;
};

// Invariants: petals distinct and nonempty as a list, every pairwise petal
// intersection equals the core, every petal strictly contains the core.
bool is_valid_sunflower(const Sunflower& s);

struct HittingSetInstance {
    SetFamily family;
    int budget = 0;
};

// Finds a sunflower with exactly petal_count petals among the given distinct
// nonempty sets (each of size <= max_set_size). Guaranteed to succeed when
// the family is larger than 2 * max_set_size! * (petal_count - 1)^max_set_size;
// below that it may or may not find one. Deterministic.
std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family,
                                        int max_set_size, int petal_count);

// True iff s shares an edge with the edge set of every member.
bool is_hitting_set(const EdgeSet& s, const SetFamily& family);

// Bounded branching on the first unhit member; returns the canonical hitting
// set of size <= budget if one exists. Intended for desk-scale instances.
std::optional<EdgeSet> brute_force_hitting_set(const HittingSetInstance& inst);

}  // namespace ktfree

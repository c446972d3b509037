#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktfree/graph.hpp"
#include "ktfree/hitting_set.hpp"

namespace ktfree {

// One application of the sunflower rule: at edge (x, y), with sunflower core
// Y, every member containing Y + {x, y} was removed and Y + {x, y} added.
struct Rule1Record {
    Edge edge;
    VertexSet core;
    int petal_count = 0;
    std::vector<VertexSet> removed;
    VertexSet added;
};

struct Rule2Record {
    std::size_t family_size = 0;  // at the moment the bound tripped
};

// Audit log of a kernelization run. Replaying the rule-1 removals/additions
// on the initial family reproduces the reduced family.
struct KernelTrace {
    int t = 0;
    int k = 0;
    std::size_t initial_family_size = 0;
    std::vector<Rule1Record> rule1;
    std::optional<Rule2Record> rule2;
    std::size_t final_family_size = 0;  // after rule 1 reached its fixpoint
};

struct KernelResult {
    Graph kernel_graph;
    int kernel_budget = 0;
    SetFamily reduced_family;  // family of the emitted instance, input vertex ids
    KernelTrace trace;
    // Per member X with |X| < t: X (input ids) and its fresh vertices (kernel ids).
    std::vector<std::pair<VertexSet, VertexSet>> fresh_vertex_map;
    // kernel id -> input id; -1 for fresh vertices (and for the whole fixed
    // no-instance, whose vertices correspond to nothing in the input).
    std::vector<Vertex> kernel_to_input;

    bool rule2_fired() const { return trace.rule2.has_value(); }
};

// 2 * (t-2)! * k^(t-2) and 2 * (t-2)! * k^(t-1), saturating at INT64_MAX.
std::int64_t rule1_threshold(int k, int t);
std::int64_t rule2_threshold(int k, int t);

// One member per t-clique of g. Requires t >= 3.
SetFamily build_family(const Graph& g, int t);

// Members containing both x and y, with x and y stripped, in canonical order.
// Contains the empty set exactly when {x, y} is itself a member.
std::vector<VertexSet> compute_link_family(const SetFamily& family, Vertex x, Vertex y);

struct Rule1Application {
    SetFamily family;
    Rule1Record record;
};

// Scans candidate edges in canonical order; at the first edge whose link
// family beats 2*(t-2)!*k^(t-2), finds a (k+1)-petal sunflower there,
// replaces all members above its core by the core member, and returns the
// new family. Returns nothing once no edge qualifies. Requires k >= 1.
std::optional<Rule1Application> apply_sunflower_rule(const SetFamily& family, int k, int t);

enum class SizeRuleDecision { proceed, no_instance };

// no_instance iff |family| > 2 * (t-2)! * k^(t-1) (strict).
SizeRuleDecision apply_size_rule(const SetFamily& family, int k, int t);

struct Reconstruction {
    Graph graph;
    std::vector<std::pair<VertexSet, VertexSet>> fresh_vertex_map;
    std::vector<Vertex> kernel_to_input;
};

// Builds the graph whose t-cliques are exactly the family members, padding
// members smaller than t with fresh vertices. The output is compact: member
// vertices first (input order preserved), then fresh vertices in canonical
// member order. Requires 2 <= |X| <= t for every member.
Reconstruction reconstruct_graph(const SetFamily& family, int t);

// Full pipeline: family construction, sunflower rule to fixpoint, size rule
// (emitting the fixed no-instance (K_t, 0) on trigger), reconstruction.
// Deterministic. Requires t >= 3, k >= 0.
KernelResult kernelize(const Graph& g, int k, int t);

// Serialized trace document (JSON, 1-indexed vertex ids).
std::string trace_to_json(const KernelResult& result);

}  // namespace ktfree

#pragma once

#include <optional>

#include "ktfree/graph.hpp"
#include "ktfree/kernelizer.hpp"

namespace ktfree {

struct DeletionInstance {
    Graph graph;
    int budget = 0;
    int t = 3;
};

struct Verdict {
    bool yes = false;
    std::optional<EdgeSet> witness;  // deletion set of size <= budget when yes
};

// Bounded search tree: find the first t-clique, branch over its edges.
// The witness is the canonical (first-in-order) solution and is re-verified
// before returning. Intended for desk-scale instances.
Verdict exact_solve(const DeletionInstance& inst);

struct EquivalenceReport {
    Verdict original;
    Verdict kernel;
    bool agree = false;
    KernelResult kernelization;
};

// Kernelizes (g, k) and solves both the input and the kernel exactly.
EquivalenceReport verify_equivalence(const Graph& g, int k, int t);

}  // namespace ktfree

#include "ktfree/exact_solver.hpp"

namespace ktfree {

namespace {

bool solve_branch(AdjacencyMatrix& adj, int t, int remaining, std::vector<Edge>& removed) {
    auto clique = first_t_clique(adj, t);
    if (!clique) return true;
    if (remaining == 0) return false;
    const EdgeSet candidates = edge_set_of(*clique);
    for (const Edge& e : candidates) {
        adj.remove(e.u, e.v);
        removed.push_back(e);
        if (solve_branch(adj, t, remaining - 1, removed)) return true;
        removed.pop_back();
        adj.add(e.u, e.v);
    }
    return false;
}

}  // namespace

Verdict exact_solve(const DeletionInstance& inst) {
    if (inst.t < 3) throw std::invalid_argument("t must be >= 3");
    if (inst.budget < 0) throw std::invalid_argument("budget must be nonnegative");

    AdjacencyMatrix adj = inst.graph.adjacency();
    std::vector<Edge> removed;
    if (!solve_branch(adj, inst.t, inst.budget, removed)) return {false, std::nullopt};

    EdgeSet witness(std::move(removed));
    if (static_cast<int>(witness.size()) > inst.budget)
        throw internal_error("witness exceeds the budget");
    if (first_t_clique(remove_edges(inst.graph, witness).adjacency(), inst.t))
        throw internal_error("witness fails to destroy every clique");
    return {true, std::move(witness)};
}

EquivalenceReport verify_equivalence(const Graph& g, int k, int t) {
    EquivalenceReport report;
    report.kernelization = kernelize(g, k, t);
    report.original = exact_solve({g, k, t});
    report.kernel = exact_solve(
        {report.kernelization.kernel_graph, report.kernelization.kernel_budget, t});
    report.agree = report.original.yes == report.kernel.yes;
    return report;
}

}  // namespace ktfree

#include "ktfree/kernelizer.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

namespace ktfree {

namespace {

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::int64_t>::max() / b)
        return std::numeric_limits<std::int64_t>::max();
    return a * b;
}

std::int64_t threshold(int k, int t, int exponent) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::int64_t value = 2;
    for (int i = 2; i <= t - 2; ++i) value = sat_mul(value, i);
    for (int i = 0; i < exponent; ++i) value = sat_mul(value, k);
    return value;
}

}  // namespace

std::int64_t rule1_threshold(int k, int t) { return threshold(k, t, t - 2); }
std::int64_t rule2_threshold(int k, int t) { return threshold(k, t, t - 1); }

SetFamily build_family(const Graph& g, int t) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    return SetFamily(enumerate_t_cliques(g, t));
}

std::vector<VertexSet> compute_link_family(const SetFamily& family, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("link family needs two distinct endpoints");
    const VertexSet xy{x, y};
    std::vector<VertexSet> out;
    for (const auto& member : family)
        if (member.contains(x) && member.contains(y))
            out.push_back(set_difference(member, xy));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Rule1Application> apply_sunflower_rule(const SetFamily& family, int k, int t) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::int64_t trigger = rule1_threshold(k, t);

    // Candidate edges are exactly the pairs covered by some member.
    std::set<Edge> candidates;
    for (const auto& member : family)
        for (std::size_t i = 0; i < member.size(); ++i)
            for (std::size_t j = i + 1; j < member.size(); ++j)
                candidates.emplace(member[i], member[j]);

    for (const Edge& e : candidates) {
        std::vector<VertexSet> link = compute_link_family(family, e.u, e.v);
        if (static_cast<std::int64_t>(link.size()) <= trigger) continue;

        std::vector<VertexSet> petal_candidates;
        for (auto& s : link)
            if (!s.empty()) petal_candidates.push_back(std::move(s));

        auto sunflower = find_sunflower(petal_candidates, t - 2, k + 1);
        if (!sunflower) {
            if (static_cast<std::int64_t>(petal_candidates.size()) > trigger)
                throw internal_error("no sunflower above the guaranteed threshold");
            // {x,y} itself is a member and excluding its empty link entry left
            // exactly the threshold; nothing is guaranteed here, move on.
            continue;
        }

        const VertexSet xy{e.u, e.v};
        VertexSet added = set_union(sunflower->core, xy);
        Rule1Record record{e, sunflower->core, k + 1, {}, added};
        for (const auto& member : family)
            if (is_subset(added, member)) record.removed.push_back(member);
        SetFamily next = family;
        for (const auto& member : record.removed) next.erase(member);
        next.insert(std::move(added));
        return Rule1Application{std::move(next), std::move(record)};
    }
    return std::nullopt;
}

SizeRuleDecision apply_size_rule(const SetFamily& family, int k, int t) {
    return static_cast<std::int64_t>(family.size()) > rule2_threshold(k, t)
               ? SizeRuleDecision::no_instance
               : SizeRuleDecision::proceed;
}

Reconstruction reconstruct_graph(const SetFamily& family, int t) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    for (const auto& member : family)
        if (static_cast<int>(member.size()) > t)
            throw std::invalid_argument("family member larger than t");

    // Surviving input vertices, in input order.
    std::vector<Vertex> used;
    for (const auto& member : family)
        for (Vertex v : member) used.push_back(v);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<Vertex> kernel_id(used.empty() ? 0 : used.back() + 1, -1);
    for (std::size_t i = 0; i < used.size(); ++i) kernel_id[used[i]] = static_cast<Vertex>(i);

    Reconstruction rec;
    rec.kernel_to_input = used;
    Vertex next_fresh = static_cast<Vertex>(used.size());

    std::vector<Edge> edges;
    for (const auto& member : family) {
        std::vector<Vertex> clique;
        for (Vertex v : member) clique.push_back(kernel_id[v]);
        const int missing = t - static_cast<int>(member.size());
        if (missing > 0) {
            std::vector<Vertex> fresh;
            for (int i = 0; i < missing; ++i) {
                fresh.push_back(next_fresh);
                clique.push_back(next_fresh);
                rec.kernel_to_input.push_back(-1);
                ++next_fresh;
            }
            rec.fresh_vertex_map.emplace_back(member, VertexSet(std::move(fresh)));
        }
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
    }
    rec.graph = Graph(next_fresh, std::move(edges));
    return rec;
}

namespace {

// Cheap always-on checks of the advertised result shape; violations are bugs.
void validate_result(const KernelResult& r, int k, int t) {
    if (r.rule2_fired()) return;
    const auto f = static_cast<std::int64_t>(r.reduced_family.size());
    if (f > rule2_threshold(k, t)) throw internal_error("family exceeds the size-rule bound");
    if (static_cast<std::int64_t>(r.kernel_graph.vertex_count()) > sat_mul(t, f))
        throw internal_error("kernel has more than t * |family| vertices");
    if (static_cast<std::int64_t>(r.kernel_graph.edge_count()) >
        sat_mul(static_cast<std::int64_t>(t) * (t - 1) / 2, f))
        throw internal_error("kernel has more than C(t,2) * |family| edges");
    for (const auto& [member, fresh] : r.fresh_vertex_map) {
        VertexSet allowed = fresh;
        for (Vertex v : member) {
            // member ids are input ids; map them into the kernel space
            for (std::size_t i = 0; i < r.kernel_to_input.size(); ++i)
                if (r.kernel_to_input[i] == v) allowed = set_union(allowed, VertexSet{static_cast<Vertex>(i)});
        }
        for (Vertex fv : fresh)
            for (Vertex other = 0; other < r.kernel_graph.vertex_count(); ++other)
                if (r.kernel_graph.adjacent(fv, other) && !allowed.contains(other))
                    throw internal_error("fresh vertex adjacent outside its member clique");
    }
}

}  // namespace

KernelResult kernelize(const Graph& g, int k, int t) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    if (k < 0) throw std::invalid_argument("k must be >= 0");

    SetFamily family = build_family(g, t);
    KernelResult result;
    result.trace.t = t;
    result.trace.k = k;
    result.trace.initial_family_size = family.size();

    // A one-petal sunflower is meaningless, so rule 1 only runs for k >= 1;
    // with k = 0 the size rule alone decides (bound is 0).
    if (k >= 1) {
        while (auto app = apply_sunflower_rule(family, k, t)) {
            family = std::move(app->family);
            result.trace.rule1.push_back(std::move(app->record));
        }
    }
    result.trace.final_family_size = family.size();

    if (apply_size_rule(family, k, t) == SizeRuleDecision::no_instance) {
        result.trace.rule2 = Rule2Record{family.size()};
        result.kernel_graph = complete_graph(t);
        result.kernel_budget = 0;
        result.reduced_family = build_family(result.kernel_graph, t);
        result.kernel_to_input.assign(t, -1);
        return result;
    }

    Reconstruction rec = reconstruct_graph(family, t);
    result.kernel_graph = std::move(rec.graph);
    result.kernel_budget = k;
    result.reduced_family = std::move(family);
    result.fresh_vertex_map = std::move(rec.fresh_vertex_map);
    result.kernel_to_input = std::move(rec.kernel_to_input);
    validate_result(result, k, t);
    return result;
}

namespace {

nlohmann::ordered_json one_indexed(const VertexSet& s) {
    auto arr = nlohmann::ordered_json::array();
    for (Vertex v : s) arr.push_back(v + 1);
    return arr;
}

}  // namespace

std::string trace_to_json(const KernelResult& result) {
    nlohmann::ordered_json j;
    j["t"] = result.trace.t;
    j["k"] = result.trace.k;
    j["initial_family_size"] = result.trace.initial_family_size;
    auto apps = nlohmann::ordered_json::array();
    for (const auto& rec : result.trace.rule1) {
        nlohmann::ordered_json a;
        a["edge"] = {rec.edge.u + 1, rec.edge.v + 1};
        a["core"] = one_indexed(rec.core);
        a["removed"] = rec.removed.size();
        a["added"] = one_indexed(rec.added);
        apps.push_back(std::move(a));
    }
    j["rule1_applications"] = std::move(apps);
    j["rule2_fired"] = result.rule2_fired();
    j["final_family_size"] = result.trace.final_family_size;
    j["kernel_vertices"] = result.kernel_graph.vertex_count();
    j["kernel_edges"] = result.kernel_graph.edge_count();
    return j.dump(2) + "\n";
}

}  // namespace ktfree

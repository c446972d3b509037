#include "ktfree/hitting_set.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace ktfree {

SetFamily::SetFamily(std::vector<VertexSet> members) : members_(std::move(members)) {
    for (const auto& x : members_)
        if (x.size() < 2) throw std::invalid_argument("family member needs at least two vertices");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const VertexSet& x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

void SetFamily::insert(VertexSet x) {
    if (x.size() < 2) throw std::invalid_argument("family member needs at least two vertices");
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it != members_.end() && *it == x) return;
    members_.insert(it, std::move(x));
}

void SetFamily::erase(const VertexSet& x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it != members_.end() && *it == x) members_.erase(it);
}

bool is_valid_sunflower(const Sunflower& s) {
    if (s.petals.empty()) return false;
    for (const auto& petal : s.petals) {
        if (!is_subset(s.core, petal)) return false;
        if (set_difference(petal, s.core).empty()) return false;
    }
    for (std::size_t i = 0; i < s.petals.size(); ++i)
        for (std::size_t j = i + 1; j < s.petals.size(); ++j) {
            if (s.petals[i] == s.petals[j]) return false;
            if (set_intersection(s.petals[i], s.petals[j]) != s.core) return false;
        }
    return true;
}

namespace {

// Scans in canonical order, keeping each set disjoint from everything kept so
// far; stops as soon as p petals are collected. Core is empty by construction.
std::optional<Sunflower> greedy_disjoint(const std::vector<VertexSet>& sorted, int p) {
    std::vector<VertexSet> picked;
    std::unordered_set<Vertex> used;
    for (const auto& s : sorted) {
        bool clash = false;
        for (Vertex v : s)
            if (used.count(v)) {
                clash = true;
                break;
            }
        if (clash) continue;
        picked.push_back(s);
        if (static_cast<int>(picked.size()) == p) return Sunflower{std::move(picked), {}};
        for (Vertex v : s) used.insert(v);
    }
    return std::nullopt;
}

// Erdos-Rado recursion over sets of one common size: either the greedy
// disjoint pass already yields p petals, or some element lies in at least
// |fam| / (size * (p - 1)) sets and the element-stripped subfamily recurses
// one size lower. Success is certain once |fam| > size! * (p - 1)^size.
std::optional<Sunflower> uniform_find(const std::vector<VertexSet>& fam, int p) {
    if (fam.empty()) return std::nullopt;
    if (auto s = greedy_disjoint(fam, p)) return s;
    if (fam.front().size() <= 1) return std::nullopt;  // distinct singletons are all disjoint

    std::map<Vertex, int> freq;
    for (const auto& s : fam)
        for (Vertex v : s) ++freq[v];
    Vertex best = freq.begin()->first;
    int best_count = 0;
    for (const auto& [v, count] : freq)
        if (count > best_count) {  // ties fall to the smallest id
            best = v;
            best_count = count;
        }

    const VertexSet pivot{best};
    std::vector<VertexSet> link;
    for (const auto& s : fam)
        if (s.contains(best)) link.push_back(set_difference(s, pivot));
    std::sort(link.begin(), link.end());

    auto sub = uniform_find(link, p);
    if (!sub) return std::nullopt;
    for (auto& petal : sub->petals) petal = set_union(petal, pivot);
    sub->core = set_union(sub->core, pivot);
    return sub;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family,
                                        int max_set_size, int petal_count) {
    if (petal_count < 1) throw std::invalid_argument("petal count must be >= 1");
    if (max_set_size < 1) throw std::invalid_argument("max set size must be >= 1");
    for (const auto& s : family) {
        if (s.empty()) throw std::invalid_argument("empty set can never be a petal");
        if (static_cast<int>(s.size()) > max_set_size)
            throw std::invalid_argument("set exceeds declared maximum size");
    }
    std::vector<VertexSet> sorted = family;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("family sets must be distinct");

    if (auto s = greedy_disjoint(sorted, petal_count)) return s;

    // Size classes. When |family| > 2 * d! * (p-1)^d, some class of size-i
    // sets exceeds i! * (p-1)^i and the uniform recursion cannot miss.
    for (int sz = 1; sz <= max_set_size; ++sz) {
        std::vector<VertexSet> cls;
        for (const auto& s : sorted)
            if (static_cast<int>(s.size()) == sz) cls.push_back(s);
        if (auto s = uniform_find(cls, petal_count)) return s;
    }
    return std::nullopt;
}

bool is_hitting_set(const EdgeSet& s, const SetFamily& family) {
    for (const auto& x : family) {
        bool hit = false;
        for (const Edge& e : s)
            if (x.contains(e.u) && x.contains(e.v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

namespace {

bool member_hit(const VertexSet& x, const std::vector<Edge>& chosen) {
    for (const Edge& e : chosen)
        if (x.contains(e.u) && x.contains(e.v)) return true;
    return false;
}

bool hs_branch(const SetFamily& family, int remaining, std::vector<Edge>& chosen) {
    const VertexSet* unhit = nullptr;
    for (const auto& x : family)
        if (!member_hit(x, chosen)) {
            unhit = &x;
            break;
        }
    if (!unhit) return true;
    if (remaining == 0) return false;
    for (std::size_t i = 0; i < unhit->size(); ++i)
        for (std::size_t j = i + 1; j < unhit->size(); ++j) {
            chosen.emplace_back((*unhit)[i], (*unhit)[j]);
            if (hs_branch(family, remaining - 1, chosen)) return true;
            chosen.pop_back();
        }
    return false;
}

}  // namespace

std::optional<EdgeSet> brute_force_hitting_set(const HittingSetInstance& inst) {
    if (inst.budget < 0) throw std::invalid_argument("budget must be nonnegative");
    std::vector<Edge> chosen;
    if (hs_branch(inst.family, inst.budget, chosen)) return EdgeSet(std::move(chosen));
    return std::nullopt;
}

}  // namespace ktfree

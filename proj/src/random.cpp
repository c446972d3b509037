#include "ktfree/random.hpp"

#include <stdexcept>

namespace ktfree {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    return gen_() % bound;
}

bool Rng::bernoulli(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability must be in [0, 1]");
    // p * 2^53 is exact for p in [0, 1]; draws land in [0, 2^53).
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
    return (gen_() >> 11) < threshold;
}

Graph random_graph(int n, double p, Rng& rng) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace ktfree

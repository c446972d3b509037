#pragma once

#include <cstdint>
#include <random>

#include "ktfree/graph.hpp"

namespace ktfree {

// Seeded mt19937_64 with fixed integer mappings, so identical seeds give
// identical streams on every platform. std::*_distribution is avoided on
// purpose: the standard does not pin its output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform over [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // True with probability p, using the top 53 bits of one draw.
    bool bernoulli(double p);

private:
    std::mt19937_64 gen_;
};

// G(n, p): each pair (u, v), u < v, scanned in canonical order, becomes an
// edge with probability p. One Bernoulli draw per pair.
Graph random_graph(int n, double p, Rng& rng);

}  // namespace ktfree

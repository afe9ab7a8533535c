#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aisle/graph.hpp"

namespace aisle::test {

// Small random instances for property tests. Rewards are integers in
// [0, max_reward], with a share of zeros so sparse rows show up.
inline AisleGraph random_graph(std::mt19937_64 &rng, int m, int n, Variant variant = Variant::TwoSided,
                               int max_reward = 9, double zero_share = 0.3) {
    std::uniform_int_distribution<int> value(1, max_reward);
    std::bernoulli_distribution zero(zero_share);
    std::vector<double> rewards(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (double &r : rewards) {
        r = zero(rng) ? 0.0 : value(rng);
    }
    return AisleGraph(m, n, variant, std::move(rewards));
}

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Budget that covers every row of a two-sided graph end to end.
inline int full_cover_budget(int m, int n) { return (n + 1) * m + 2 * (m - 1); }

}  // namespace aisle::test

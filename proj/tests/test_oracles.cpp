#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "aisle/oracles.hpp"
#include "support.hpp"

namespace aisle {
namespace {

// Plain walk enumeration with no memoization: every closed walk from home of
// at most `budget` edges, reward over distinct vertices.
double enumerate_walks(const AisleGraph &g, int budget) {
    std::vector<VertexId> walk{kHome};
    double best = 0.0;
    std::function<void(int)> go = [&](int left) {
        if (walk.back() == kHome) {
            best = std::max(best, tour_reward(g, Tour{walk}));
        }
        if (left == 0) {
            return;
        }
        for (const VertexId &u : neighbors(g, walk.back())) {
            walk.push_back(u);
            go(left - 1);
            walk.pop_back();
        }
    };
    go(budget);
    return best;
}

const AisleGraph kA22(2, 2, Variant::TwoSided, {1, 1, 5, 5});

TEST(OracleCop, ZeroBudget) {
    const CopOracleResult r = oracle_cop(kA22, 0);
    EXPECT_EQ(r.reward, 0.0);
    EXPECT_EQ(r.witness, Tour::home().vertices);
}

TEST(OracleCop, CompleteVisit) {
    EXPECT_EQ(oracle_cop(kA22, test::full_cover_budget(2, 2)).reward, 12.0);
    const AisleGraph g(4, 2, Variant::TwoSided, {1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(oracle_cop(g, test::full_cover_budget(4, 2)).reward, 36.0);
}

TEST(OracleCop, OddRowCountNeedsMoreThanCoverFormula) {
    // With m odd the last crossing ends on the right side, so (n+1)m + 2(m-1)
    // edges cannot visit everything; one more row's worth of edges can.
    const AisleGraph g(3, 2, Variant::TwoSided, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(oracle_cop(g, test::full_cover_budget(3, 2)).reward, 19.0);
    EXPECT_EQ(oracle_cop(g, test::full_cover_budget(3, 2) + 1).reward, 21.0);
}

TEST(OracleCop, TwoRowExample) {
    const CopOracleResult r = oracle_cop(kA22, 8);
    EXPECT_EQ(r.reward, 12.0);
    EXPECT_EQ(enumerate_walks(kA22, 8), 12.0);
    EXPECT_TRUE(validate_tour(kA22, Tour{r.witness}, 8).passed());
    EXPECT_EQ(tour_reward(kA22, Tour{r.witness}), 12.0);
}

TEST(OracleCop, MatchesWalkEnumeration) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        const int m = test::uniform_int(rng, 1, 3);
        const int n = test::uniform_int(rng, 1, 3);
        const Variant v = rep % 3 == 0 ? Variant::LeftOnly : Variant::TwoSided;
        const AisleGraph g = test::random_graph(rng, m, n, v);
        const int b = test::uniform_int(rng, 0, 11);
        const CopOracleResult r = oracle_cop(g, b);
        ASSERT_EQ(r.reward, enumerate_walks(g, b)) << "m=" << m << " n=" << n << " B=" << b;
        EXPECT_TRUE(validate_tour(g, Tour{r.witness}, b).passed());
        EXPECT_EQ(tour_reward(g, Tour{r.witness}), r.reward);
    }
}

TEST(OracleCop, SymmetricUnderEqualRewardSwap) {
    // Swapping two equal-reward vertices within a row leaves the optimum alone.
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 20; ++rep) {
        const AisleGraph g = test::random_graph(rng, 3, 4, Variant::TwoSided, 3, 0.2);
        std::vector<double> r = g.reward_data();
        for (int i = 0; i < 3; ++i) {
            for (int a = 0; a < 4; ++a) {
                for (int b = a + 1; b < 4; ++b) {
                    if (r[i * 4 + a] == r[i * 4 + b]) {
                        std::swap(r[i * 4 + a], r[i * 4 + b]);
                    }
                }
            }
        }
        const AisleGraph h(3, 4, Variant::TwoSided, r);
        const int budget = test::uniform_int(rng, 0, 30);
        EXPECT_EQ(oracle_cop(g, budget).reward, oracle_cop(h, budget).reward);
    }
}

TEST(OracleCop, Refuses) {
    EXPECT_THROW(oracle_cop(AisleGraph::zeros(4, 4), 10), OracleRefused);
    EXPECT_THROW(oracle_cop(kA22, 61), OracleRefused);
    OracleLimits wide;
    wide.max_budget = 80;
    EXPECT_NO_THROW(oracle_cop(kA22, 61, wide));
}

TEST(OracleFr, BelowThreshold) {
    for (int b = 0; b < 6; ++b) {
        EXPECT_EQ(oracle_cop_fr(kA22, b), 0.0);
    }
}

TEST(OracleFr, ExactThresholdDoublesBestSingleRow) {
    // Only row 1 is reachable at B = 2(n+1).
    EXPECT_EQ(oracle_cop_fr(kA22, 6), 2.0);
    const AisleGraph g(1, 3, Variant::TwoSided, {2, 3, 4});
    EXPECT_EQ(oracle_cop_fr(g, 8), 9.0);
}

TEST(OracleFr, Refuses) {
    EXPECT_THROW(oracle_cop_fr(AisleGraph::zeros(21, 1), 10), OracleRefused);
    EXPECT_THROW(oracle_cop_fr(kA22.as_left_only(), 10), std::invalid_argument);
}

TEST(OracleSc, TwoRowExample) {
    EXPECT_EQ(oracle_cop_sc(kA22.as_left_only(), 10), 12.0);
}

TEST(OracleSc, ReachOnlyBudgetIsZero) {
    // Rewards only in row i: 2(i-1) edges reach it but cannot enter it.
    for (int i = 1; i <= 5; ++i) {
        std::vector<double> r(5 * 3, 0.0);
        std::fill(r.begin() + 3 * (i - 1), r.begin() + 3 * i, 4.0);
        const AisleGraph g(5, 3, Variant::LeftOnly, r);
        EXPECT_EQ(oracle_cop_sc(g, 2 * (i - 1)), 0.0);
        EXPECT_EQ(oracle_cop_sc(g, 2 * (i - 1) + 2), 4.0);
    }
}

TEST(OracleSc, WholeGraph) {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        const int m = test::uniform_int(rng, 1, 6);
        const int n = test::uniform_int(rng, 1, 5);
        const AisleGraph g = test::random_graph(rng, m, n, Variant::LeftOnly);
        EXPECT_EQ(oracle_cop_sc(g, 2 * n * m + 2 * (m - 1)), g.total_reward());
    }
}

TEST(OracleSc, ProfileMonotone) {
    std::mt19937_64 rng(39);
    const AisleGraph g = test::random_graph(rng, 5, 4, Variant::LeftOnly);
    const auto p = oracle_cop_sc_profile(g, 40);
    ASSERT_EQ(p.size(), 41u);
    for (std::size_t b = 1; b < p.size(); ++b) {
        EXPECT_GE(p[b], p[b - 1]);
        if (b % 2 == 1) {
            EXPECT_EQ(p[b], p[b - 1]);
        }
    }
}

TEST(OracleSc, Refuses) {
    OracleLimits tight;
    tight.max_sc_vectors = 10;
    const AisleGraph g(3, 2, Variant::LeftOnly, {1, 1, 1, 1, 1, 1});
    EXPECT_THROW(oracle_cop_sc(g, 10, tight), OracleRefused);
}

TEST(Oracles, GeneralDominatesRestrictions) {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 40; ++rep) {
        const int m = test::uniform_int(rng, 1, 4);
        const int n = test::uniform_int(rng, 1, 12 / m);
        const AisleGraph g = test::random_graph(rng, m, n);
        const int b = test::uniform_int(rng, 0, 30);
        const double cop = oracle_cop(g, b).reward;
        EXPECT_GE(cop, oracle_cop_fr(g, b));
        EXPECT_GE(cop, oracle_cop_sc(g, b));
    }
}

TEST(Shapes, Classification) {
    const AisleGraph g = AisleGraph::zeros(2, 2);
    const std::vector<VertexId> full{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 2}, {2, 1}, {2, 0}, {1, 0}};
    const std::vector<VertexId> detour{{1, 0}, {1, 1}, {1, 0}};
    EXPECT_TRUE(is_full_row_shaped(g, full));
    EXPECT_FALSE(is_single_column_shaped(g, full));
    EXPECT_FALSE(is_full_row_shaped(g, detour));
    EXPECT_TRUE(is_single_column_shaped(g, detour));
    EXPECT_TRUE(is_full_row_shaped(g, Tour::home().vertices));
    EXPECT_TRUE(is_single_column_shaped(g, Tour::home().vertices));
}

}  // namespace
}  // namespace aisle

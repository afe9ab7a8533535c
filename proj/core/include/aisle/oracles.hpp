#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aisle/graph.hpp"

namespace aisle {

// Brute-force reference solvers. They only read the reward matrix and
// rebuild everything else (adjacency, row sums, costs) from the raw problem
// statement, so they share no logic with the solvers they check.

struct OracleLimits {
    int max_reward_vertices = 12;  // m*n for the general oracle
    int max_budget = 60;           // general oracle only
    int max_rows_fr = 20;
    // Upper bound on the single-column depth vectors (product over rows of
    // the candidate depth counts) before the enumeration is refused.
    std::uint64_t max_sc_vectors = 100'000'000;
};

class OracleRefused : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct CopOracleResult {
    double reward = 0.0;
    // One optimal closed walk from home (just home when nothing is worth it).
    std::vector<VertexId> witness;
};

// Exact optimum of the general problem by memoized search over
// (vertex, remaining budget, collected reward vertices).
CopOracleResult oracle_cop(const AisleGraph &g, int budget, const OracleLimits &limits = {});

// Exact optimum over full-row tours by enumerating row subsets.
double oracle_cop_fr(const AisleGraph &g, int budget, const OracleLimits &limits = {});

// Exact optimum over single-column tours by enumerating depth vectors.
double oracle_cop_sc(const AisleGraph &g, int budget, const OracleLimits &limits = {});
// Same enumeration; entry B is the optimum for budget B, B = 0..budget.
std::vector<double> oracle_cop_sc_profile(const AisleGraph &g, int budget,
                                          const OracleLimits &limits = {});

// Walk shape checks used to classify oracle witnesses.
// Full-row shaped: every stretch inside a row runs from one side column to the other.
bool is_full_row_shaped(const AisleGraph &g, const std::vector<VertexId> &walk);
// Single-column shaped: never touches column n+1.
bool is_single_column_shaped(const AisleGraph &g, const std::vector<VertexId> &walk);

}  // namespace aisle

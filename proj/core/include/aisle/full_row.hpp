#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aisle/graph.hpp"

namespace aisle {

// Optimal solvers restricted to tours made of complete row traversals.

struct RowProfile {
    // cum[i-1] is the reward of row i traversed end to end.
    std::vector<double> cum;
    // Row indices (1-based), cum non-increasing, ties by smaller index.
    std::vector<int> order;

    double row_reward(int row) const { return cum[static_cast<std::size_t>(row - 1)]; }
};

RowProfile row_profile(const AisleGraph &g);

// Largest even number of full rows affordable once 2(furthest-1) is reserved
// for the vertical moves down to `furthest` and back.
int permitted_rows(int budget, int n, int furthest);

struct FullRowPlan {
    int furthest = 1;
    // Ascending; even length; at most one row repeated.
    std::vector<int> rows;

    int cost(int n) const {
        return 2 * (furthest - 1) + static_cast<int>(rows.size()) * (n + 1);
    }
};

class PlanInfeasible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Traverses plan.rows top to bottom, alternating direction, switching rows on
// the side column the previous traversal ended at, then walks down column 0
// to plan.furthest (if deeper) and back home.
std::pair<Tour, TourAnnotation> build_full_row_tour(const AisleGraph &g, const FullRowPlan &plan);

// OFr: for every furthest row, the furthest row plus the best k-1 rows above it.
SolveResult solve_ofr(const AisleGraph &g, int budget);

struct OfrIStats {
    // Positions of the sorted row list examined during the descending sweep.
    std::size_t scanned = 0;
};

// OFr-I: same optimum as solve_ofr with a single forward scan over the sorted
// rows while the furthest row decreases.
SolveResult solve_ofr_i(const AisleGraph &g, int budget, OfrIStats *stats = nullptr);

}  // namespace aisle

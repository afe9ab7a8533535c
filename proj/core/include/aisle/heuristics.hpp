#pragma once

#include <string_view>
#include <vector>

#include "aisle/graph.hpp"

namespace aisle {

enum class Side { Left, Right };

struct Detour {
    int row = 1;
    Side side = Side::Left;
    int depth = 1;  // inner vertices entered from the side column

    friend bool operator==(const Detour &, const Detour &) = default;
};

struct DetourPlan {
    std::vector<Detour> detours;
    int cost = 0;  // edges, sum of 2 * depth
    double gained = 0.0;
};

// Inner-vertex mask (row-major, m*n) of the vertices a tour visits.
std::vector<bool> collected_mask(const AisleGraph &g, const Tour &t);

// Best set of out-and-back detours hanging off side-column vertices already on
// a base tour, within p extra edges. Rows that are fully traversed are not
// eligible; a row reachable from both sides gets one combined choice so a
// vertex is never counted twice. Solved exactly as a grouped knapsack over p/2.
DetourPlan residual_detours(const AisleGraph &g, const TourAnnotation &base, int p,
                            const std::vector<bool> &collected);

// Inserts each detour right after the first visit of its anchor vertex.
Tour splice_detours(const AisleGraph &g, const Tour &base, const DetourPlan &plan);

// OFr-I, then residual detours.
SolveResult solve_h1(const AisleGraph &g, int budget);
// Rows that the left and right single-column optima both reach deeply become
// full rows; residual detours fill the rest.
SolveResult solve_h2(const AisleGraph &g, int budget);
// Row 1 and the furthest affordable row as full rows, then residual detours.
SolveResult solve_h3(const AisleGraph &g, int budget);
// Best of H1, H2, H3, OFr-I and OSc.
SolveResult solve_hgc(const AisleGraph &g, int budget);

// Greedy baselines: repeatedly take the full row (GFr) or row prefix/suffix
// (GPr) with the largest reward per unit of committed budget, keeping enough
// budget to return home after every pick.
SolveResult solve_gfr(const AisleGraph &g, int budget);
SolveResult solve_gpr(const AisleGraph &g, int budget);

// Names accepted by run_algorithm: ofr, ofr_i, osc, h1, h2, h3, hgc, gfr, gpr.
const std::vector<std::string_view> &algorithm_names();
SolveResult run_algorithm(std::string_view name, const AisleGraph &g, int budget);

}  // namespace aisle

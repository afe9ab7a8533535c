#include "aisle/heuristics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "aisle/full_row.hpp"
#include "aisle/single_column.hpp"

namespace aisle {

std::vector<bool> collected_mask(const AisleGraph &g, const Tour &t) {
    const int n = g.inner_cols();
    std::vector<bool> mask(static_cast<std::size_t>(g.rows()) * n, false);
    for (const VertexId &v : t.vertices) {
        if (v.col >= 1 && v.col <= n) {
            mask[static_cast<std::size_t>(v.row - 1) * n + (v.col - 1)] = true;
        }
    }
    return mask;
}

namespace {

struct RowItems {
    int row = 0;
    // Parallel arrays over strictly improving half-costs.
    std::vector<int> cost;
    std::vector<double> value;
    std::vector<int> left_depth;
};

RowItems row_items(const AisleGraph &g, int row, bool left, bool right,
                   const std::vector<bool> &collected) {
    const int n = g.inner_cols();
    const std::size_t base = static_cast<std::size_t>(row - 1) * n;
    std::vector<double> from_left(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> from_right(static_cast<std::size_t>(n) + 1, 0.0);
    for (int d = 1; d <= n; ++d) {
        const int lj = d;
        const int rj = n + 1 - d;
        from_left[d] = from_left[d - 1] + (collected[base + lj - 1] ? 0.0 : g.inner(row, lj));
        from_right[d] = from_right[d - 1] + (collected[base + rj - 1] ? 0.0 : g.inner(row, rj));
    }

    RowItems items;
    items.row = row;
    double running = 0.0;
    for (int c = 1; c <= n; ++c) {
        double best = -1.0;
        int best_left = 0;
        const int lo = right ? 0 : c;
        const int hi = left ? c : 0;
        for (int a = lo; a <= hi; ++a) {
            const double v = from_left[a] + from_right[c - a];
            if (v > best) {
                best = v;
                best_left = a;
            }
        }
        if (best > running) {
            running = best;
            items.cost.push_back(c);
            items.value.push_back(best);
            items.left_depth.push_back(best_left);
        }
    }
    return items;
}

}  // namespace

DetourPlan residual_detours(const AisleGraph &g, const TourAnnotation &base, int p,
                            const std::vector<bool> &collected) {
    DetourPlan plan;
    const int want = p / 2;
    if (want <= 0) {
        return plan;
    }

    std::vector<RowItems> groups;
    long long capacity_cap = 0;
    for (int i = 1; i <= g.rows(); ++i) {
        if (base.row_fully_traversed[i]) {
            continue;
        }
        const bool left = base.left_col_on_tour[i];
        const bool right = g.two_sided() && base.right_col_on_tour[i];
        if (!left && !right) {
            continue;
        }
        RowItems items = row_items(g, i, left, right, collected);
        if (!items.cost.empty()) {
            capacity_cap += items.cost.back();
            groups.push_back(std::move(items));
        }
    }
    if (groups.empty()) {
        return plan;
    }

    const int H = static_cast<int>(std::min<long long>(want, capacity_cap));
    const std::size_t width = static_cast<std::size_t>(H) + 1;
    std::vector<double> dp(width, 0.0);
    std::vector<double> next(width, 0.0);
    std::vector<int> choice(groups.size() * width, -1);

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const RowItems &items = groups[gi];
        int *pick = &choice[gi * width];
        next = dp;
        for (int h = 1; h <= H; ++h) {
            for (std::size_t k = 0; k < items.cost.size(); ++k) {
                const int c = items.cost[k];
                if (c > h) {
                    break;
                }
                const double v = dp[static_cast<std::size_t>(h - c)] + items.value[k];
                if (v > next[static_cast<std::size_t>(h)]) {
                    next[static_cast<std::size_t>(h)] = v;
                    pick[h] = static_cast<int>(k);
                }
            }
        }
        dp.swap(next);
    }

    int h = H;
    while (h > 0 && dp[static_cast<std::size_t>(h - 1)] == dp[static_cast<std::size_t>(H)]) {
        --h;
    }
    plan.gained = dp[static_cast<std::size_t>(h)];
    for (std::size_t gi = groups.size(); gi-- > 0;) {
        const int k = choice[gi * width + static_cast<std::size_t>(h)];
        if (k < 0) {
            continue;
        }
        const RowItems &items = groups[gi];
        const int c = items.cost[static_cast<std::size_t>(k)];
        const int left = items.left_depth[static_cast<std::size_t>(k)];
        if (c - left > 0) {
            plan.detours.push_back({items.row, Side::Right, c - left});
        }
        if (left > 0) {
            plan.detours.push_back({items.row, Side::Left, left});
        }
        plan.cost += 2 * c;
        h -= c;
    }
    std::reverse(plan.detours.begin(), plan.detours.end());
    return plan;
}

Tour splice_detours(const AisleGraph &g, const Tour &base, const DetourPlan &plan) {
    const int m = g.rows();
    const int n = g.inner_cols();
    std::vector<int> left(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> right(static_cast<std::size_t>(m) + 1, 0);
    for (const Detour &d : plan.detours) {
        auto &slot = d.side == Side::Left ? left : right;
        if (slot[static_cast<std::size_t>(d.row)] != 0) {
            throw std::invalid_argument("duplicate detour for row " + std::to_string(d.row));
        }
        slot[static_cast<std::size_t>(d.row)] = d.depth;
    }

    Tour out;
    out.vertices.reserve(base.vertices.size() + static_cast<std::size_t>(plan.cost));
    for (const VertexId &v : base.vertices) {
        out.vertices.push_back(v);
        if (v.col == 0 && left[static_cast<std::size_t>(v.row)] > 0) {
            const int depth = std::exchange(left[static_cast<std::size_t>(v.row)], 0);
            for (int j = 1; j <= depth; ++j) {
                out.vertices.push_back({v.row, j});
            }
            for (int j = depth - 1; j >= 0; --j) {
                out.vertices.push_back({v.row, j});
            }
        } else if (v.col == n + 1 && right[static_cast<std::size_t>(v.row)] > 0) {
            const int depth = std::exchange(right[static_cast<std::size_t>(v.row)], 0);
            for (int j = n; j >= n + 1 - depth; --j) {
                out.vertices.push_back({v.row, j});
            }
            for (int j = n + 2 - depth; j <= n + 1; ++j) {
                out.vertices.push_back({v.row, j});
            }
        }
    }
    for (int i = 1; i <= m; ++i) {
        if (left[static_cast<std::size_t>(i)] != 0 || right[static_cast<std::size_t>(i)] != 0) {
            throw std::invalid_argument("detour anchor for row " + std::to_string(i) +
                                        " is not on the base tour");
        }
    }
    return out;
}

namespace {

void require_two_sided(const AisleGraph &g, const char *name) {
    if (!g.two_sided()) {
        throw std::invalid_argument(std::string(name) + " needs a two-sided graph");
    }
}

SolveResult with_detours(const AisleGraph &g, const char *name, const Tour &base, int budget) {
    const int p = budget - tour_cost(base);
    const DetourPlan plan = residual_detours(g, annotate_tour(g, base), p, collected_mask(g, base));
    return make_result(g, name, splice_detours(g, base, plan), budget);
}

SolveResult h1_from(const AisleGraph &g, const SolveResult &ofr_i, int budget) {
    return with_detours(g, "h1", ofr_i.tour, budget);
}

SolveResult h2_from(const AisleGraph &g, const OscSolution &left, int budget) {
    const int m = g.rows();
    const int n = g.inner_cols();
    const OscSolution right = solve_osc(g, budget, true);

    std::vector<int> combined(static_cast<std::size_t>(m) + 1, 0);
    for (std::size_t k = 0; k < left.depths.size(); ++k) {
        combined[k + 1] += left.depths[k];
    }
    for (std::size_t k = 0; k < right.depths.size(); ++k) {
        combined[k + 1] += right.depths[k];
    }

    // Sweep n/2, n/3, ... down to 1 until at least two rows qualify.
    std::vector<int> qualifying;
    for (int divisor = 2;; ++divisor) {
        const double threshold = std::max(1.0, static_cast<double>(n) / divisor);
        qualifying.clear();
        for (int i = 1; i <= m; ++i) {
            if (combined[static_cast<std::size_t>(i)] >= threshold) {
                qualifying.push_back(i);
            }
        }
        if (qualifying.size() >= 2 || threshold <= 1.0) {
            break;
        }
    }

    if (qualifying.size() % 2 != 0) {
        // Drop the least-deep row; among ties the furthest one.
        auto weakest = qualifying.begin();
        for (auto it = qualifying.begin(); it != qualifying.end(); ++it) {
            if (combined[static_cast<std::size_t>(*it)] <= combined[static_cast<std::size_t>(*weakest)]) {
                weakest = it;
            }
        }
        qualifying.erase(weakest);
    }

    const RowProfile prof = row_profile(g);
    auto plan_cost = [&](const std::vector<int> &rows) {
        return rows.empty() ? 0 : 2 * (rows.back() - 1) + static_cast<int>(rows.size()) * (n + 1);
    };
    while (qualifying.size() >= 2 && plan_cost(qualifying) > budget) {
        for (int drop = 0; drop < 2; ++drop) {
            auto cheapest = qualifying.begin();
            for (auto it = qualifying.begin(); it != qualifying.end(); ++it) {
                if (prof.row_reward(*it) <= prof.row_reward(*cheapest)) {
                    cheapest = it;
                }
            }
            qualifying.erase(cheapest);
        }
    }

    if (qualifying.size() < 2) {
        return with_detours(g, "h2", Tour::home(), budget);
    }
    FullRowPlan plan;
    plan.rows = qualifying;
    plan.furthest = qualifying.back();
    return with_detours(g, "h2", build_full_row_tour(g, plan).first, budget);
}

}  // namespace

SolveResult solve_h1(const AisleGraph &g, int budget) {
    require_two_sided(g, "h1");
    return h1_from(g, solve_ofr_i(g, budget), budget);
}

SolveResult solve_h2(const AisleGraph &g, int budget) {
    require_two_sided(g, "h2");
    return h2_from(g, solve_osc(g, budget), budget);
}

SolveResult solve_h3(const AisleGraph &g, int budget) {
    require_two_sided(g, "h3");
    const int n = g.inner_cols();
    if (budget < 2 * (n + 1)) {
        return make_result(g, "h3", Tour::home(), budget);
    }
    FullRowPlan plan;
    plan.furthest = std::min(g.rows(), (budget - 2 * (n + 1)) / 2 + 1);
    plan.rows = {1, plan.furthest};
    return with_detours(g, "h3", build_full_row_tour(g, plan).first, budget);
}

SolveResult solve_hgc(const AisleGraph &g, int budget) {
    require_two_sided(g, "hgc");
    SolveResult ofr_i = solve_ofr_i(g, budget);
    OscSolution osc = solve_osc(g, budget);

    std::array<SolveResult, 5> candidates{
        h1_from(g, ofr_i, budget),
        h2_from(g, osc, budget),
        solve_h3(g, budget),
        std::move(ofr_i),
        std::move(osc.result),
    };
    std::size_t best = 0;
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const SolveResult &c = candidates[k];
        const SolveResult &b = candidates[best];
        if (c.reward > b.reward || (c.reward == b.reward && c.budget_used < b.budget_used)) {
            best = k;
        }
    }
    SolveResult out = std::move(candidates[best]);
    out.algorithm = "hgc";
    return out;
}

const std::vector<std::string_view> &algorithm_names() {
    static const std::vector<std::string_view> names{"ofr", "ofr_i", "osc", "h1",  "h2",
                                                     "h3",  "hgc",   "gfr", "gpr"};
    return names;
}

SolveResult run_algorithm(std::string_view name, const AisleGraph &g, int budget) {
    if (name == "ofr") {
        return solve_ofr(g, budget);
    }
    if (name == "ofr_i") {
        return solve_ofr_i(g, budget);
    }
    if (name == "osc") {
        return solve_osc(g, budget).result;
    }
    if (name == "h1") {
        return solve_h1(g, budget);
    }
    if (name == "h2") {
        return solve_h2(g, budget);
    }
    if (name == "h3") {
        return solve_h3(g, budget);
    }
    if (name == "hgc") {
        return solve_hgc(g, budget);
    }
    if (name == "gfr") {
        return solve_gfr(g, budget);
    }
    if (name == "gpr") {
        return solve_gpr(g, budget);
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace aisle

#include "aisle/full_row.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace aisle {

RowProfile row_profile(const AisleGraph &g) {
    const int m = g.rows();
    const int n = g.inner_cols();
    RowProfile prof;
    prof.cum.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i <= m; ++i) {
        double sum = 0.0;
        for (int j = 1; j <= n; ++j) {
            sum += g.inner(i, j);
        }
        prof.cum[static_cast<std::size_t>(i - 1)] = sum;
    }
    prof.order.resize(static_cast<std::size_t>(m));
    std::iota(prof.order.begin(), prof.order.end(), 1);
    std::stable_sort(prof.order.begin(), prof.order.end(),
                     [&](int a, int b) { return prof.row_reward(a) > prof.row_reward(b); });
    return prof;
}

int permitted_rows(int budget, int n, int furthest) {
    const int residual = budget - 2 * (furthest - 1);
    if (residual <= 0) {
        return 0;
    }
    return 2 * (residual / (2 * (n + 1)));
}

namespace {

void check_plan(const AisleGraph &g, const FullRowPlan &plan) {
    if (plan.furthest < 1 || plan.furthest > g.rows()) {
        throw PlanInfeasible("furthest row " + std::to_string(plan.furthest) + " is outside 1.." +
                             std::to_string(g.rows()));
    }
    if (plan.rows.empty()) {
        return;
    }
    if (!g.two_sided()) {
        throw PlanInfeasible("full rows need a two-sided graph");
    }
    if (plan.rows.size() % 2 != 0) {
        throw PlanInfeasible("a closed full-row tour needs an even number of traversals");
    }
    if (!std::is_sorted(plan.rows.begin(), plan.rows.end())) {
        throw PlanInfeasible("plan rows must be ascending");
    }
    if (plan.rows.front() < 1 || plan.rows.back() > plan.furthest) {
        throw PlanInfeasible("plan rows must lie within 1..furthest");
    }
    int repeats = 0;
    for (std::size_t k = 1; k < plan.rows.size(); ++k) {
        if (plan.rows[k] == plan.rows[k - 1]) {
            ++repeats;
        }
    }
    if (repeats > 1) {
        throw PlanInfeasible("at most one row may be traversed twice");
    }
}

void walk_column(std::vector<VertexId> &out, int col, int from, int to) {
    const int step = to > from ? 1 : -1;
    for (int r = from; r != to;) {
        r += step;
        out.push_back({r, col});
    }
}

FullRowPlan all_rows_plan(int furthest) {
    FullRowPlan plan;
    plan.furthest = furthest;
    plan.rows.resize(static_cast<std::size_t>(furthest));
    std::iota(plan.rows.begin(), plan.rows.end(), 1);
    if (furthest % 2 != 0) {
        plan.rows.push_back(furthest);
    }
    return plan;
}

double prefix_sum(const RowProfile &prof, int upto) {
    double sum = 0.0;
    for (int i = 1; i <= upto; ++i) {
        sum += prof.row_reward(i);
    }
    return sum;
}

SolveResult emit(const AisleGraph &g, const char *name, const FullRowPlan &plan, int budget) {
    auto [tour, ann] = build_full_row_tour(g, plan);
    (void)ann;
    return make_result(g, name, std::move(tour), budget);
}

void require_two_sided(const AisleGraph &g) {
    if (!g.two_sided()) {
        throw std::invalid_argument("full-row solvers need a two-sided graph");
    }
}

}  // namespace

std::pair<Tour, TourAnnotation> build_full_row_tour(const AisleGraph &g, const FullRowPlan &plan) {
    check_plan(g, plan);
    const int n = g.inner_cols();

    Tour tour;
    auto &v = tour.vertices;
    v.reserve(static_cast<std::size_t>(plan.cost(n)) + 1);
    v.push_back(kHome);

    int row = 1;
    int side = 0;
    for (int target : plan.rows) {
        walk_column(v, side, row, target);
        row = target;
        if (side == 0) {
            for (int j = 1; j <= n + 1; ++j) {
                v.push_back({row, j});
            }
            side = n + 1;
        } else {
            for (int j = n; j >= 0; --j) {
                v.push_back({row, j});
            }
            side = 0;
        }
    }
    walk_column(v, 0, row, plan.furthest);
    walk_column(v, 0, plan.furthest, 1);

    TourAnnotation ann = annotate_tour(g, tour);
    return {std::move(tour), std::move(ann)};
}

SolveResult solve_ofr(const AisleGraph &g, int budget) {
    require_two_sided(g);
    const int m = g.rows();
    const int n = g.inner_cols();
    const RowProfile prof = row_profile(g);

    bool found = false;
    double best = 0.0;
    FullRowPlan best_plan;

    for (int furthest = 1; furthest <= m; ++furthest) {
        const int k = permitted_rows(budget, n, furthest);
        // A plan that touches row `furthest` needs at least one pair of traversals.
        if (k < 2) {
            continue;
        }
        double val = 0.0;
        FullRowPlan plan;
        if (k >= furthest) {
            val = prefix_sum(prof, furthest);
            plan = all_rows_plan(furthest);
        } else {
            val = prof.row_reward(furthest);
            plan.furthest = furthest;
            plan.rows.push_back(furthest);
            for (int row : prof.order) {
                if (static_cast<int>(plan.rows.size()) == k) {
                    break;
                }
                if (row < furthest) {
                    val += prof.row_reward(row);
                    plan.rows.push_back(row);
                }
            }
            std::sort(plan.rows.begin(), plan.rows.end());
        }
        if (!found || val > best) {
            found = true;
            best = val;
            best_plan = std::move(plan);
        }
    }

    if (!found) {
        return make_result(g, "ofr", Tour::home(), budget);
    }
    return emit(g, "ofr", best_plan, budget);
}

SolveResult solve_ofr_i(const AisleGraph &g, int budget, OfrIStats *stats) {
    require_two_sided(g);
    const int m = g.rows();
    const int n = g.inner_cols();
    const RowProfile prof = row_profile(g);

    std::vector<char> selected(static_cast<std::size_t>(m) + 2, 0);
    int selected_count = 0;
    double selected_sum = 0.0;
    std::size_t pos = 0;
    std::size_t scanned = 0;
    int old_k = 0;

    bool found = false;
    bool best_is_all_rows = false;
    double best = 0.0;
    int best_furthest = 1;
    int best_k = 0;

    auto add_next = [&](int furthest) {
        if (pos >= prof.order.size()) {
            throw std::logic_error("row scan ran past the sorted row list");
        }
        const int row = prof.order[pos++];
        ++scanned;
        if (row <= furthest) {
            selected[static_cast<std::size_t>(row)] = 1;
            ++selected_count;
            selected_sum += prof.row_reward(row);
            return true;
        }
        return false;
    };

    for (int furthest = m; furthest >= 1; --furthest) {
        const int k = permitted_rows(budget, n, furthest);
        if (k >= furthest) {
            // Every row up to `furthest` fits; smaller furthest rows cannot do better.
            const double val = prefix_sum(prof, furthest);
            if (!found || val >= best) {
                found = true;
                best = val;
                best_is_all_rows = true;
                best_furthest = furthest;
            }
            break;
        }

        int to_add = 0;
        if (furthest == m) {
            to_add = k;
        } else {
            // k grows by at most 2 per step since 2(n+1) > 2.
            to_add = k - old_k;
            if (selected[static_cast<std::size_t>(furthest) + 1]) {
                selected[static_cast<std::size_t>(furthest) + 1] = 0;
                --selected_count;
                selected_sum -= prof.row_reward(furthest + 1);
                ++to_add;
            }
        }
        for (int added = 0; added < to_add;) {
            if (add_next(furthest)) {
                ++added;
            }
        }
        old_k = k;

        if (k >= 2 && (!found || selected_sum >= best)) {
            found = true;
            best = selected_sum;
            best_is_all_rows = false;
            best_furthest = furthest;
            best_k = k;
        }
    }

    if (stats != nullptr) {
        stats->scanned = scanned;
    }
    if (!found) {
        return make_result(g, "ofr_i", Tour::home(), budget);
    }

    FullRowPlan plan;
    if (best_is_all_rows) {
        plan = all_rows_plan(best_furthest);
    } else {
        for (int row : prof.order) {
            if (static_cast<int>(plan.rows.size()) == best_k) {
                break;
            }
            if (row <= best_furthest) {
                plan.rows.push_back(row);
            }
        }
        std::sort(plan.rows.begin(), plan.rows.end());
        plan.furthest = plan.rows.back();
    }
    return emit(g, "ofr_i", plan, budget);
}

}  // namespace aisle

// Greedy full-row (GFr) and partial-row (GPr) baselines.
//
// The robot always stands on a side column. A pick moves it vertically to a
// row and then either crosses the row or walks in and back out. The score of a
// pick is its uncollected reward divided by the growth of spent budget plus
// the cheapest way home from the resulting position; picks are only taken if
// that way home still fits the budget.

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "aisle/heuristics.hpp"

namespace aisle {
namespace {

class Walker {
public:
    Walker(const AisleGraph &g, int budget)
        : g_(g), n_(g.inner_cols()), budget_(budget),
          collected_(static_cast<std::size_t>(g.rows()) * g.inner_cols(), false) {
        tour_.vertices.push_back(kHome);
    }

    int row() const { return row_; }
    int col() const { return col_; }
    bool on_left() const { return col_ == 0; }
    int spent() const { return tour_cost(tour_); }

    // Cheapest return from (row, side): straight up column 0, or cross some
    // row at or above `row` first when standing on the right.
    int home_cost(int row, bool left) const { return left ? row - 1 : (n_ + 1) + (row - 1); }

    bool is_collected(int row, int col) const {
        return collected_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
    }

    double uncollected(int row, int col) const { return is_collected(row, col) ? 0.0 : g_.inner(row, col); }

    double row_gain(int row) const {
        double sum = 0.0;
        for (int j = 1; j <= n_; ++j) {
            sum += uncollected(row, j);
        }
        return sum;
    }

    void move_to_row(int target) {
        const int step = target > row_ ? 1 : -1;
        while (row_ != target) {
            row_ += step;
            push({row_, col_});
        }
    }

    void cross() {
        const int step = on_left() ? 1 : -1;
        const int end = on_left() ? n_ + 1 : 0;
        while (col_ != end) {
            col_ += step;
            push({row_, col_});
        }
    }

    void out_and_back(int depth) {
        const int step = on_left() ? 1 : -1;
        const int start = col_;
        for (int k = 0; k < depth; ++k) {
            col_ += step;
            push({row_, col_});
        }
        while (col_ != start) {
            col_ -= step;
            push({row_, col_});
        }
    }

    // Return home; from the right side, cross the most rewarding row at or
    // above the current one.
    Tour finish() {
        if (!on_left()) {
            int best_row = row_;
            double best = -1.0;
            for (int i = row_; i >= 1; --i) {
                const double gain = row_gain(i);
                if (gain > best) {
                    best = gain;
                    best_row = i;
                }
            }
            move_to_row(best_row);
            cross();
        }
        move_to_row(1);
        if (spent() > budget_) {
            throw std::logic_error("greedy walk exceeded its budget");
        }
        return std::move(tour_);
    }

private:
    void push(const VertexId &v) {
        tour_.vertices.push_back(v);
        if (v.col >= 1 && v.col <= n_) {
            collected_[static_cast<std::size_t>(v.row - 1) * n_ + (v.col - 1)] = true;
        }
    }

    const AisleGraph &g_;
    int n_;
    int budget_;
    int row_ = 1;
    int col_ = 0;
    std::vector<bool> collected_;
    Tour tour_;
};

struct Pick {
    int row = 0;
    int depth = 0;  // 0 = cross the row
    double gain = 0.0;
    int delta = 0;

    bool valid() const { return row > 0; }
};

// Higher reward per unit of committed budget wins; a free pick beats any paid
// one; ties go to the larger gain.
bool better(const Pick &a, const Pick &b) {
    if (!b.valid()) {
        return true;
    }
    const bool a_free = a.delta <= 0;
    const bool b_free = b.delta <= 0;
    if (a_free != b_free) {
        return a_free;
    }
    if (!a_free) {
        const double lhs = a.gain * b.delta;
        const double rhs = b.gain * a.delta;
        if (lhs != rhs) {
            return lhs > rhs;
        }
    }
    return a.gain > b.gain;
}

void consider(Pick &best, const Walker &w, int budget, int row, int depth, double gain, int cost,
              bool ends_left) {
    if (gain <= 0.0) {
        return;
    }
    const int after = w.spent() + cost;
    const int back = w.home_cost(row, ends_left);
    if (after + back > budget) {
        return;
    }
    Pick cand{row, depth, gain, cost + back - w.home_cost(w.row(), w.on_left())};
    if (better(cand, best)) {
        best = cand;
    }
}

void require_two_sided(const AisleGraph &g, const char *name) {
    if (!g.two_sided()) {
        throw std::invalid_argument(std::string(name) + " needs a two-sided graph");
    }
}

}  // namespace

SolveResult solve_gfr(const AisleGraph &g, int budget) {
    require_two_sided(g, "gfr");
    const int n = g.inner_cols();
    Walker w(g, budget);
    for (;;) {
        Pick best;
        for (int i = 1; i <= g.rows(); ++i) {
            const int cost = std::abs(i - w.row()) + (n + 1);
            consider(best, w, budget, i, 0, w.row_gain(i), cost, !w.on_left());
        }
        if (!best.valid()) {
            break;
        }
        w.move_to_row(best.row);
        w.cross();
    }
    return make_result(g, "gfr", w.finish(), budget);
}

SolveResult solve_gpr(const AisleGraph &g, int budget) {
    require_two_sided(g, "gpr");
    const int n = g.inner_cols();
    Walker w(g, budget);
    for (;;) {
        Pick best;
        const bool left = w.on_left();
        for (int i = 1; i <= g.rows(); ++i) {
            const int reach = std::abs(i - w.row());
            double gain = 0.0;
            for (int d = 1; d <= n; ++d) {
                gain += w.uncollected(i, left ? d : n + 1 - d);
                // Turning around at a vertex that adds nothing is never better
                // than turning around one step earlier.
                if (w.uncollected(i, left ? d : n + 1 - d) > 0.0) {
                    consider(best, w, budget, i, d, gain, reach + 2 * d, left);
                }
            }
            consider(best, w, budget, i, 0, gain, reach + (n + 1), !left);
        }
        if (!best.valid()) {
            break;
        }
        w.move_to_row(best.row);
        if (best.depth == 0) {
            w.cross();
        } else {
            w.out_and_back(best.depth);
        }
    }
    return make_result(g, "gpr", w.finish(), budget);
}

}  // namespace aisle

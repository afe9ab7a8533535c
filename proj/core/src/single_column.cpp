#include "aisle/single_column.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace aisle {

PrefixTable::PrefixTable(const AisleGraph &g)
    : m_(g.rows()), n_(g.inner_cols()),
      data_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_ + 1), 0.0) {
    for (int i = 1; i <= m_; ++i) {
        double *row = &data_[static_cast<std::size_t>(i - 1) * (n_ + 1)];
        for (int j = 1; j <= n_; ++j) {
            row[j] = row[j - 1] + g.inner(i, j);
        }
    }
}

DpTables::DpTables(PrefixTable prefix, int half_budget)
    : prefix_(std::move(prefix)), half_budget_(half_budget),
      R_(static_cast<std::size_t>(prefix_.rows()) * static_cast<std::size_t>(half_budget + 1), 0.0),
      S_(R_.size(), 0) {}

std::optional<double> DpTables::best(int row, int b) const {
    if (unreachable(row, b)) {
        return std::nullopt;
    }
    return R_[offset(row, b)];
}

DpTables build_tables(const PrefixTable &prefix, int half_budget) {
    DpTables t(prefix, half_budget);
    const int m = prefix.rows();
    const int n = prefix.inner_cols();
    const int H = half_budget;
    const std::size_t width = static_cast<std::size_t>(H) + 1;

    // Row 1: walk in as far as the budget allows; keep the shallowest depth
    // that already achieves the prefix reward.
    for (int b = 0; b <= H; ++b) {
        const int deepest = std::min(b, n);
        const double value = prefix.at(1, deepest);
        int depth = deepest;
        while (depth > 0 && prefix.at(1, depth - 1) == value) {
            --depth;
        }
        t.R_[static_cast<std::size_t>(b)] = value;
        t.S_[static_cast<std::size_t>(b)] = depth;
    }

    for (int i = 2; i <= m; ++i) {
        const double *prev = &t.R_[static_cast<std::size_t>(i - 2) * width];
        double *cur = &t.R_[static_cast<std::size_t>(i - 1) * width];
        int *choice = &t.S_[static_cast<std::size_t>(i - 1) * width];
        const double *T = prefix.row_data(i);
        for (int b = i - 1; b <= H; ++b) {
            // Reaching row i costs one half-unit from row i-1, so depth j needs
            // row i-1 to be reachable with b-j-1 >= i-2.
            const int max_depth = std::min(b - i + 1, n);
            double best = prev[b - 1];
            int best_j = 0;
            for (int j = 1; j <= max_depth; ++j) {
                const double v = prev[b - j - 1] + T[j];
                if (v > best) {
                    best = v;
                    best_j = j;
                }
            }
            cur[b] = best;
            choice[b] = best_j;
        }
    }
    return t;
}

namespace {

int best_last_row(const DpTables &t) {
    const int H = t.half_budget();
    const int reachable = std::min(t.rows(), H + 1);
    int best_row = 1;
    double best = *t.best(1, H);
    for (int i = 2; i <= reachable; ++i) {
        const double v = *t.best(i, H);
        if (v > best) {
            best = v;
            best_row = i;
        }
    }
    return best_row;
}

VertexId reflect(const VertexId &v, int n) { return {v.row, n + 1 - v.col}; }

}  // namespace

Tour single_column_tour(const std::vector<int> &depths) {
    Tour t;
    auto &v = t.vertices;
    v.push_back(kHome);
    const int last = std::max<int>(1, static_cast<int>(depths.size()));
    for (int i = 1; i <= last; ++i) {
        if (i > 1) {
            v.push_back({i, 0});
        }
        const int d = i <= static_cast<int>(depths.size()) ? depths[static_cast<std::size_t>(i - 1)] : 0;
        for (int j = 1; j <= d; ++j) {
            v.push_back({i, j});
        }
        for (int j = d - 1; j >= 0; --j) {
            v.push_back({i, j});
        }
    }
    for (int i = last - 1; i >= 1; --i) {
        v.push_back({i, 0});
    }
    return t;
}

Traceback osc_traceback(const DpTables &tables, const AisleGraph &g) {
    if (g.rows() != tables.rows() || g.inner_cols() != tables.prefix().inner_cols()) {
        throw TableInconsistency("tables do not match the graph dimensions");
    }
    const int n = g.inner_cols();
    const int last = best_last_row(tables);
    const double target = *tables.best(last, tables.half_budget());

    Traceback tb;
    tb.depths.assign(static_cast<std::size_t>(last), 0);
    int b = tables.half_budget();
    for (int i = last; i >= 1; --i) {
        if (DpTables::unreachable(i, b)) {
            throw TableInconsistency("traceback reached an unreachable cell at row " +
                                     std::to_string(i));
        }
        const int d = tables.choice(i, b);
        if (d < 0 || d > n || (i == 1 && d > b)) {
            throw TableInconsistency("invalid depth " + std::to_string(d) + " at row " +
                                     std::to_string(i));
        }
        tb.depths[static_cast<std::size_t>(i - 1)] = d;
        if (i > 1) {
            b -= d + 1;
        }
    }

    double sum = 0.0;
    for (int i = 1; i <= last; ++i) {
        sum += tables.prefix().at(i, tb.depths[static_cast<std::size_t>(i - 1)]);
    }
    if (sum != target) {
        throw TableInconsistency("traceback reward does not match the table optimum");
    }
    tb.tour = single_column_tour(tb.depths);
    return tb;
}

std::vector<double> osc_reward_profile(const DpTables &tables) {
    std::vector<double> profile(static_cast<std::size_t>(tables.half_budget()) + 1, 0.0);
    for (int b = 0; b <= tables.half_budget(); ++b) {
        double best = *tables.best(1, b);
        for (int i = 2; i <= tables.rows() && i - 1 <= b; ++i) {
            best = std::max(best, *tables.best(i, b));
        }
        profile[static_cast<std::size_t>(b)] = best;
    }
    return profile;
}

void write_tables_csv(std::ostream &os, const DpTables &tables) {
    os << "row";
    for (int b = 0; b <= tables.half_budget(); ++b) {
        os << ",b" << b;
    }
    os << '\n';
    for (int i = 1; i <= tables.rows(); ++i) {
        os << i;
        for (int b = 0; b <= tables.half_budget(); ++b) {
            auto v = tables.best(i, b);
            os << ',';
            if (v) {
                os << *v;
            } else {
                os << "-inf";
            }
        }
        os << '\n';
    }
}

OscSolution solve_osc(const AisleGraph &g, int budget, bool mirrored) {
    if (budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    const AisleGraph work = mirrored ? g.mirrored() : g;
    DpTables tables = build_tables(PrefixTable(work), budget / 2);
    Traceback tb = osc_traceback(tables, work);

    Tour tour = std::move(tb.tour);
    if (mirrored) {
        for (VertexId &v : tour.vertices) {
            v = reflect(v, g.inner_cols());
        }
    }
    SolveResult res = make_result(g, mirrored ? "osc_right" : "osc", std::move(tour), budget);
    return OscSolution{std::move(res), std::move(tables), std::move(tb.depths)};
}

}  // namespace aisle

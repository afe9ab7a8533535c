#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aisle/graph.hpp"

namespace aisle {

// Optimal solver for tours that only use column 0: every row visit is an
// out-and-back detour from the left side column. Works in half-budget units b,
// since every such tour has even cost.

class PrefixTable {
public:
    explicit PrefixTable(const AisleGraph &g);

    int rows() const { return m_; }
    int inner_cols() const { return n_; }
    // Reward of row i collected from column 1 up to column j (0 <= j <= n).
    double at(int row, int depth) const {
        return data_[static_cast<std::size_t>(row - 1) * (n_ + 1) + depth];
    }
    const double *row_data(int row) const {
        return &data_[static_cast<std::size_t>(row - 1) * (n_ + 1)];
    }

private:
    int m_;
    int n_;
    std::vector<double> data_;
};

class DpTables {
public:
    DpTables(PrefixTable prefix, int half_budget);

    int rows() const { return prefix_.rows(); }
    int half_budget() const { return half_budget_; }
    const PrefixTable &prefix() const { return prefix_; }

    // Row i is unreachable with half-budget b < i-1; that is the -inf cell.
    static bool unreachable(int row, int b) { return b < row - 1; }

    // Best reward over tours whose furthest row is `row` using at most 2b edges;
    // nullopt for the -inf cells.
    std::optional<double> best(int row, int b) const;
    // Depth chosen in `row` for that optimum (0 = row not entered).
    int choice(int row, int b) const { return S_[offset(row, b)]; }

private:
    friend DpTables build_tables(const PrefixTable &, int);

    std::size_t offset(int row, int b) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(half_budget_ + 1) +
               static_cast<std::size_t>(b);
    }

    PrefixTable prefix_;
    int half_budget_;
    std::vector<double> R_;
    std::vector<int> S_;
};

// Fills R and S for half-budgets 0..half_budget.
DpTables build_tables(const PrefixTable &prefix, int half_budget);

struct OscSolution {
    SolveResult result;
    DpTables tables;
    // depths[k] is the detour depth into row k+1; size is the furthest row.
    std::vector<int> depths;
};

class TableInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// mirrored = true solves the right-hand side: the instance is reflected, solved,
// and the tour reflected back, so it is anchored at (1, n+1) rather than home.
OscSolution solve_osc(const AisleGraph &g, int budget, bool mirrored = false);

struct Traceback {
    std::vector<int> depths;
    Tour tour;
};

// Reconstructs the optimal depth vector and tour for the full half-budget.
// `g` must be the graph the tables were built from (after any mirroring).
Traceback osc_traceback(const DpTables &tables, const AisleGraph &g);

// profile[b] = best reward with half-budget b, for b = 0..half_budget.
std::vector<double> osc_reward_profile(const DpTables &tables);

// Comma separated R table, "-inf" for unreachable cells; one line per row.
void write_tables_csv(std::ostream &os, const DpTables &tables);

// Tour for a depth vector: down column 0, detour into each row, back home.
Tour single_column_tour(const std::vector<int> &depths);

}  // namespace aisle

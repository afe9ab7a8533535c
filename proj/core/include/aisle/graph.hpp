#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aisle {

// Aisle-graph model. Rows are 1-based (1..m). Columns are 0..n+1 for a
// two-sided graph and 0..n for a left-only (single column) graph; columns 0
// and n+1 are the interconnecting side columns and never carry reward.
// Every tour starts and ends at home = (1, 0) and every edge costs 1.

enum class Variant { TwoSided, LeftOnly };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct VertexId {
    int row = 1;
    int col = 0;

    friend auto operator<=>(const VertexId &, const VertexId &) = default;
};

std::ostream &operator<<(std::ostream &os, const VertexId &v);

inline constexpr VertexId kHome{1, 0};

class InvalidVertex : public std::out_of_range {
public:
    explicit InvalidVertex(const VertexId &v);
};

class AisleGraph {
public:
    // rewards is row-major, m*n entries, reward of v_{i,j} at (i-1)*n + (j-1).
    AisleGraph(int m, int n, Variant variant, std::vector<double> rewards);

    static AisleGraph zeros(int m, int n, Variant variant = Variant::TwoSided);

    int rows() const { return m_; }
    int inner_cols() const { return n_; }
    Variant variant() const { return variant_; }
    bool two_sided() const { return variant_ == Variant::TwoSided; }

    // Last column index: n+1 (two-sided) or n (left-only).
    int last_col() const { return two_sided() ? n_ + 1 : n_; }

    bool contains(const VertexId &v) const;
    bool is_side_col(int col) const { return col == 0 || (two_sided() && col == n_ + 1); }

    // Reward of any vertex; side columns report 0. Throws InvalidVertex.
    double reward(const VertexId &v) const;
    // Reward of inner vertex (row, col) with 1 <= col <= n, unchecked.
    double inner(int row, int col) const { return rewards_[index(row, col)]; }

    double total_reward() const;
    std::size_t vertex_count() const;

    const std::vector<double> &reward_data() const { return rewards_; }

    // Left-right reflection: inner column j maps to n+1-j. Two-sided only.
    AisleGraph mirrored() const;
    // Same rewards viewed as a single-column graph.
    AisleGraph as_left_only() const;

    friend bool operator==(const AisleGraph &, const AisleGraph &) = default;

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(col - 1);
    }

    int m_;
    int n_;
    Variant variant_;
    std::vector<double> rewards_;
};

std::vector<VertexId> neighbors(const AisleGraph &g, const VertexId &v);
bool adjacent(const AisleGraph &g, const VertexId &a, const VertexId &b);

struct Tour {
    std::vector<VertexId> vertices;

    static Tour home() { return Tour{{kHome}}; }
    bool empty() const { return vertices.empty(); }
};

int tour_cost(const Tour &t);
// Sum of rewards over the set of distinct vertices of t.
double tour_reward(const AisleGraph &g, const Tour &t);

struct ValidationReport {
    bool starts_home = false;
    bool ends_home = false;
    bool steps_adjacent = false;
    bool within_budget = false;
    int cost = 0;
    double reward = 0.0;
    std::vector<std::string> violations;

    bool passed() const { return starts_home && ends_home && steps_adjacent && within_budget; }
};

ValidationReport validate_tour(const AisleGraph &g, const Tour &t, int budget);

// Which side columns a tour touches in each row, and whether the row's inner
// vertices were all visited. Index 0 is unused; rows are 1..m.
struct TourAnnotation {
    std::vector<bool> left_col_on_tour;
    std::vector<bool> right_col_on_tour;
    std::vector<bool> row_fully_traversed;
};

TourAnnotation annotate_tour(const AisleGraph &g, const Tour &t);

struct SolveResult {
    std::string algorithm;
    Tour tour;
    double reward = 0.0;
    int budget_limit = 0;
    int budget_used = 0;
};

// Packages a tour; reward and budget_used are recomputed from the tour.
SolveResult make_result(const AisleGraph &g, std::string algorithm, Tour tour, int budget);

// "i:j i:j ..." on one line.
std::string format_tour(const Tour &t);
Tour parse_tour(std::string_view line);

}  // namespace aisle

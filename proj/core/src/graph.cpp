#include "aisle/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace aisle {

std::string_view to_string(Variant v) {
    return v == Variant::TwoSided ? "two_sided" : "left_only";
}

Variant parse_variant(std::string_view text) {
    if (text == "two_sided") {
        return Variant::TwoSided;
    }
    if (text == "left_only") {
        return Variant::LeftOnly;
    }
    throw std::invalid_argument("unknown graph variant '" + std::string(text) + "'");
}

std::ostream &operator<<(std::ostream &os, const VertexId &v) {
    return os << v.row << ':' << v.col;
}

namespace {

std::string describe(const VertexId &v) {
    std::ostringstream os;
    os << "invalid vertex (" << v.row << ',' << v.col << ')';
    return os.str();
}

}  // namespace

InvalidVertex::InvalidVertex(const VertexId &v) : std::out_of_range(describe(v)) {}

AisleGraph::AisleGraph(int m, int n, Variant variant, std::vector<double> rewards)
    : m_(m), n_(n), variant_(variant), rewards_(std::move(rewards)) {
    if (m_ < 1 || n_ < 1) {
        throw std::invalid_argument("aisle graph needs m >= 1 and n >= 1");
    }
    if (rewards_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("reward matrix must have m*n entries");
    }
    for (double r : rewards_) {
        if (!(r >= 0.0)) {
            throw std::invalid_argument("rewards must be non-negative");
        }
    }
}

AisleGraph AisleGraph::zeros(int m, int n, Variant variant) {
    return AisleGraph(m, n, variant,
                      std::vector<double>(static_cast<std::size_t>(std::max(m, 0)) *
                                          static_cast<std::size_t>(std::max(n, 0))));
}

bool AisleGraph::contains(const VertexId &v) const {
    return v.row >= 1 && v.row <= m_ && v.col >= 0 && v.col <= last_col();
}

double AisleGraph::reward(const VertexId &v) const {
    if (!contains(v)) {
        throw InvalidVertex(v);
    }
    if (v.col == 0 || v.col == n_ + 1) {
        return 0.0;
    }
    return rewards_[index(v.row, v.col)];
}

double AisleGraph::total_reward() const {
    double sum = 0.0;
    for (double r : rewards_) {
        sum += r;
    }
    return sum;
}

std::size_t AisleGraph::vertex_count() const {
    return static_cast<std::size_t>(m_) * static_cast<std::size_t>(last_col() + 1);
}

AisleGraph AisleGraph::mirrored() const {
    if (!two_sided()) {
        throw std::invalid_argument("only a two-sided graph can be mirrored");
    }
    std::vector<double> flipped(rewards_.size());
    for (int i = 1; i <= m_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            flipped[index(i, j)] = rewards_[index(i, n_ + 1 - j)];
        }
    }
    return AisleGraph(m_, n_, Variant::TwoSided, std::move(flipped));
}

AisleGraph AisleGraph::as_left_only() const {
    return AisleGraph(m_, n_, Variant::LeftOnly, rewards_);
}

std::vector<VertexId> neighbors(const AisleGraph &g, const VertexId &v) {
    if (!g.contains(v)) {
        throw InvalidVertex(v);
    }
    std::vector<VertexId> out;
    out.reserve(3);
    if (g.is_side_col(v.col)) {
        if (v.row > 1) {
            out.push_back({v.row - 1, v.col});
        }
        if (v.row < g.rows()) {
            out.push_back({v.row + 1, v.col});
        }
    }
    if (v.col > 0) {
        out.push_back({v.row, v.col - 1});
    }
    if (v.col < g.last_col()) {
        out.push_back({v.row, v.col + 1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool adjacent(const AisleGraph &g, const VertexId &a, const VertexId &b) {
    if (!g.contains(a) || !g.contains(b)) {
        return false;
    }
    if (a.row == b.row) {
        return std::abs(a.col - b.col) == 1;
    }
    return a.col == b.col && g.is_side_col(a.col) && std::abs(a.row - b.row) == 1;
}

int tour_cost(const Tour &t) {
    return t.vertices.empty() ? 0 : static_cast<int>(t.vertices.size()) - 1;
}

double tour_reward(const AisleGraph &g, const Tour &t) {
    const int m = g.rows();
    const int n = g.inner_cols();
    std::vector<bool> seen(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), false);
    for (const VertexId &v : t.vertices) {
        if (!g.contains(v)) {
            throw InvalidVertex(v);
        }
        if (v.col >= 1 && v.col <= n) {
            seen[static_cast<std::size_t>(v.row - 1) * n + (v.col - 1)] = true;
        }
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (seen[k]) {
            sum += g.reward_data()[k];
        }
    }
    return sum;
}

ValidationReport validate_tour(const AisleGraph &g, const Tour &t, int budget) {
    ValidationReport rep;
    rep.cost = tour_cost(t);
    if (t.vertices.empty()) {
        rep.violations.push_back("tour is empty");
        return rep;
    }

    rep.starts_home = t.vertices.front() == kHome;
    rep.ends_home = t.vertices.back() == kHome;
    if (!rep.starts_home) {
        rep.violations.push_back("tour does not start at home 1:0");
    }
    if (!rep.ends_home) {
        rep.violations.push_back("tour does not end at home 1:0");
    }

    rep.steps_adjacent = true;
    Tour in_bounds;
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        const VertexId &v = t.vertices[k];
        if (!g.contains(v)) {
            rep.steps_adjacent = false;
            std::ostringstream os;
            os << "vertex " << k << " (" << v << ") is outside the graph";
            rep.violations.push_back(os.str());
            continue;
        }
        in_bounds.vertices.push_back(v);
        if (k > 0 && g.contains(t.vertices[k - 1]) && !adjacent(g, t.vertices[k - 1], v)) {
            rep.steps_adjacent = false;
            std::ostringstream os;
            os << "step " << k << " (" << t.vertices[k - 1] << " -> " << v << ") is not an edge";
            rep.violations.push_back(os.str());
        }
    }

    rep.within_budget = rep.cost <= budget;
    if (!rep.within_budget) {
        rep.violations.push_back("cost " + std::to_string(rep.cost) + " exceeds budget " +
                                 std::to_string(budget));
    }
    rep.reward = tour_reward(g, in_bounds);
    return rep;
}

TourAnnotation annotate_tour(const AisleGraph &g, const Tour &t) {
    const int m = g.rows();
    const int n = g.inner_cols();
    TourAnnotation ann;
    ann.left_col_on_tour.assign(m + 1, false);
    ann.right_col_on_tour.assign(m + 1, false);
    ann.row_fully_traversed.assign(m + 1, false);

    std::vector<int> inner_seen(m + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(m) * n, false);
    for (const VertexId &v : t.vertices) {
        if (!g.contains(v)) {
            throw InvalidVertex(v);
        }
        if (v.col == 0) {
            ann.left_col_on_tour[v.row] = true;
        } else if (v.col == n + 1) {
            ann.right_col_on_tour[v.row] = true;
        } else {
            auto k = static_cast<std::size_t>(v.row - 1) * n + (v.col - 1);
            if (!seen[k]) {
                seen[k] = true;
                ++inner_seen[v.row];
            }
        }
    }
    for (int i = 1; i <= m; ++i) {
        ann.row_fully_traversed[i] = inner_seen[i] == n;
    }
    return ann;
}

SolveResult make_result(const AisleGraph &g, std::string algorithm, Tour tour, int budget) {
    SolveResult res;
    res.algorithm = std::move(algorithm);
    res.reward = tour_reward(g, tour);
    res.budget_used = tour_cost(tour);
    res.budget_limit = budget;
    res.tour = std::move(tour);
    return res;
}

std::string format_tour(const Tour &t) {
    std::ostringstream os;
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
        if (k > 0) {
            os << ' ';
        }
        os << t.vertices[k];
    }
    return os.str();
}

Tour parse_tour(std::string_view line) {
    Tour t;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size()) {
            throw std::invalid_argument("malformed tour token '" + tok + "'");
        }
        std::size_t used_i = 0;
        std::size_t used_j = 0;
        std::string lhs = tok.substr(0, colon);
        std::string rhs = tok.substr(colon + 1);
        int i = 0;
        int j = 0;
        try {
            i = std::stoi(lhs, &used_i);
            j = std::stoi(rhs, &used_j);
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed tour token '" + tok + "'");
        }
        if (used_i != lhs.size() || used_j != rhs.size()) {
            throw std::invalid_argument("malformed tour token '" + tok + "'");
        }
        t.vertices.push_back({i, j});
    }
    return t;
}

}  // namespace aisle

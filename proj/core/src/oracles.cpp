#include "aisle/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

namespace aisle {

namespace {

// Plain grid indexing for the oracle's private copy of the graph.
struct Grid {
    int m;
    int n;
    int cols;  // n+2 or n+1
    bool right;

    explicit Grid(const AisleGraph &g)
        : m(g.rows()), n(g.inner_cols()), cols(g.two_sided() ? g.inner_cols() + 2 : g.inner_cols() + 1),
          right(g.two_sided()) {}

    int id(int i, int j) const { return (i - 1) * cols + j; }
    int size() const { return m * cols; }
    int row_of(int id) const { return id / cols + 1; }
    int col_of(int id) const { return id % cols; }

    bool interconnect(int j) const { return j == 0 || (right && j == n + 1); }

    std::vector<int> adjacent(int v) const {
        const int i = row_of(v);
        const int j = col_of(v);
        std::vector<int> out;
        if (j > 0) {
            out.push_back(id(i, j - 1));
        }
        if (j < cols - 1) {
            out.push_back(id(i, j + 1));
        }
        if (interconnect(j)) {
            if (i > 1) {
                out.push_back(id(i - 1, j));
            }
            if (i < m) {
                out.push_back(id(i + 1, j));
            }
        }
        return out;
    }
};

class CopSearch {
public:
    CopSearch(const AisleGraph &g, int budget) : grid_(g), budget_(budget) {
        const int V = grid_.size();
        bit_.assign(static_cast<std::size_t>(V), -1);
        value_.assign(static_cast<std::size_t>(V), 0.0);
        for (int i = 1; i <= grid_.m; ++i) {
            for (int j = 1; j <= grid_.n; ++j) {
                const double r = g.inner(i, j);
                if (r > 0.0) {
                    const int v = grid_.id(i, j);
                    bit_[static_cast<std::size_t>(v)] = bits_++;
                    value_[static_cast<std::size_t>(v)] = r;
                }
            }
        }
        adj_.resize(static_cast<std::size_t>(V));
        for (int v = 0; v < V; ++v) {
            adj_[static_cast<std::size_t>(v)] = grid_.adjacent(v);
        }

        // Hop distance back to home, by BFS.
        dist_.assign(static_cast<std::size_t>(V), std::numeric_limits<int>::max());
        std::deque<int> queue{grid_.id(1, 0)};
        dist_[static_cast<std::size_t>(grid_.id(1, 0))] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (dist_[static_cast<std::size_t>(u)] == std::numeric_limits<int>::max()) {
                    dist_[static_cast<std::size_t>(u)] = dist_[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(u);
                }
            }
        }

        const std::size_t states = static_cast<std::size_t>(V) * static_cast<std::size_t>(budget_ + 1)
                                   << bits_;
        memo_.assign(states, kUnset);
    }

    double best(int v, int rem, std::uint32_t mask) {
        double &slot = memo_[key(v, rem, mask)];
        if (!std::isnan(slot)) {
            return slot;
        }
        double out = v == home() ? 0.0 : -std::numeric_limits<double>::infinity();
        if (rem > 0) {
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (dist_[static_cast<std::size_t>(u)] > rem - 1) {
                    continue;
                }
                auto [gain, next] = step(u, mask);
                out = std::max(out, gain + best(u, rem - 1, next));
            }
        }
        slot = out;
        return out;
    }

    std::vector<VertexId> witness() {
        std::vector<VertexId> walk;
        int v = home();
        int rem = budget_;
        std::uint32_t mask = 0;
        walk.push_back(vertex(v));
        for (;;) {
            const double target = best(v, rem, mask);
            if (v == home() && target == 0.0) {
                break;
            }
            bool moved = false;
            for (int u : adj_[static_cast<std::size_t>(v)]) {
                if (rem == 0 || dist_[static_cast<std::size_t>(u)] > rem - 1) {
                    continue;
                }
                auto [gain, next] = step(u, mask);
                if (gain + best(u, rem - 1, next) == target) {
                    v = u;
                    --rem;
                    mask = next;
                    walk.push_back(vertex(v));
                    moved = true;
                    break;
                }
            }
            if (!moved) {
                break;
            }
        }
        return walk;
    }

    int home() const { return grid_.id(1, 0); }

private:
    static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

    std::size_t key(int v, int rem, std::uint32_t mask) const {
        return ((static_cast<std::size_t>(v) * static_cast<std::size_t>(budget_ + 1) +
                 static_cast<std::size_t>(rem))
                << bits_) |
               mask;
    }

    std::pair<double, std::uint32_t> step(int u, std::uint32_t mask) const {
        const int b = bit_[static_cast<std::size_t>(u)];
        if (b < 0 || (mask >> b) & 1U) {
            return {0.0, mask};
        }
        return {value_[static_cast<std::size_t>(u)], mask | (1U << b)};
    }

    VertexId vertex(int v) const { return {grid_.row_of(v), grid_.col_of(v)}; }

    Grid grid_;
    int budget_;
    int bits_ = 0;
    std::vector<int> bit_;
    std::vector<double> value_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;
    std::vector<double> memo_;
};

void refuse(const std::string &what) { throw OracleRefused("oracle refused: " + what); }

}  // namespace

CopOracleResult oracle_cop(const AisleGraph &g, int budget, const OracleLimits &limits) {
    if (g.rows() * g.inner_cols() > limits.max_reward_vertices) {
        refuse("m*n = " + std::to_string(g.rows() * g.inner_cols()) + " exceeds " +
               std::to_string(limits.max_reward_vertices));
    }
    if (budget > limits.max_budget) {
        refuse("budget " + std::to_string(budget) + " exceeds " + std::to_string(limits.max_budget));
    }
    if (budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    CopSearch search(g, budget);
    CopOracleResult res;
    res.reward = search.best(search.home(), budget, 0);
    res.witness = search.witness();
    return res;
}

double oracle_cop_fr(const AisleGraph &g, int budget, const OracleLimits &limits) {
    const int m = g.rows();
    const int n = g.inner_cols();
    if (m > limits.max_rows_fr) {
        refuse("m = " + std::to_string(m) + " exceeds " + std::to_string(limits.max_rows_fr));
    }
    if (!g.two_sided()) {
        throw std::invalid_argument("full rows need a two-sided graph");
    }
    std::vector<double> row_sum(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            row_sum[static_cast<std::size_t>(i - 1)] += g.inner(i, j);
        }
    }

    double best = 0.0;
    for (std::uint32_t subset = 1; subset < (1U << m); ++subset) {
        int count = 0;
        int deepest = 0;
        double reward = 0.0;
        for (int i = 0; i < m; ++i) {
            if ((subset >> i) & 1U) {
                ++count;
                deepest = i + 1;
                reward += row_sum[static_cast<std::size_t>(i)];
            }
        }
        // An odd selection crosses one of its rows a second time to get back left.
        const int crossings = count % 2 == 0 ? count : count + 1;
        const int cost = 2 * (deepest - 1) + crossings * (n + 1);
        if (cost <= budget) {
            best = std::max(best, reward);
        }
    }
    return best;
}

std::vector<double> oracle_cop_sc_profile(const AisleGraph &g, int budget,
                                          const OracleLimits &limits) {
    if (budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    const int m = g.rows();
    const int n = g.inner_cols();

    // A walk into a row that turns at a zero-reward vertex is dominated by
    // turning one step earlier, so only reward-bearing turning points matter.
    std::vector<std::vector<std::pair<int, double>>> options(static_cast<std::size_t>(m) + 1);
    std::uint64_t vectors = 1;
    for (int i = 1; i <= m; ++i) {
        auto &opts = options[static_cast<std::size_t>(i)];
        opts.emplace_back(0, 0.0);
        double prefix = 0.0;
        for (int j = 1; j <= n; ++j) {
            prefix += g.inner(i, j);
            if (g.inner(i, j) > 0.0) {
                opts.emplace_back(j, prefix);
            }
        }
        vectors = std::min<std::uint64_t>(vectors * opts.size(), limits.max_sc_vectors + 1);
    }
    if (vectors > limits.max_sc_vectors) {
        refuse("more than " + std::to_string(limits.max_sc_vectors) + " depth vectors");
    }

    const int half = budget / 2;
    // best_at[c]: best reward with half-cost exactly c.
    std::vector<double> best_at(static_cast<std::size_t>(half) + 1, -1.0);

    // Iterative DFS over (row, depth option index).
    struct Frame {
        int row;
        std::size_t option;
        int cost_before;
        double reward_before;
    };
    std::vector<Frame> stack;
    stack.push_back({1, 0, 0, 0.0});
    while (!stack.empty()) {
        Frame &f = stack.back();
        const auto &opts = options[static_cast<std::size_t>(f.row)];
        if (f.option >= opts.size()) {
            stack.pop_back();
            continue;
        }
        const auto [depth, reward] = opts[f.option++];
        const int cost = f.cost_before + depth;
        if (cost > half) {
            // Options are sorted by depth, so deeper ones cost more too.
            stack.pop_back();
            continue;
        }
        const double total = f.reward_before + reward;
        best_at[static_cast<std::size_t>(cost)] = std::max(best_at[static_cast<std::size_t>(cost)], total);
        // Descending one more row costs one half-unit (down and back up).
        if (f.row < m && cost + 1 <= half) {
            stack.push_back({f.row + 1, 0, cost + 1, total});
        }
    }

    std::vector<double> profile(static_cast<std::size_t>(budget) + 1, 0.0);
    double running = 0.0;
    for (int b = 0; b <= budget; ++b) {
        if (b % 2 == 0) {
            running = std::max(running, best_at[static_cast<std::size_t>(b / 2)]);
        }
        profile[static_cast<std::size_t>(b)] = running;
    }
    return profile;
}

double oracle_cop_sc(const AisleGraph &g, int budget, const OracleLimits &limits) {
    return oracle_cop_sc_profile(g, budget, limits).back();
}

bool is_full_row_shaped(const AisleGraph &g, const std::vector<VertexId> &walk) {
    const int n = g.inner_cols();
    if (!g.two_sided()) {
        // Without a right column the only full-row tour is staying home.
        return std::all_of(walk.begin(), walk.end(), [](const VertexId &v) { return v.col == 0; });
    }
    std::size_t k = 0;
    while (k < walk.size()) {
        if (walk[k].col == 0 || walk[k].col == n + 1) {
            ++k;
            continue;
        }
        // Inner stretch walk[k..e); it must come from one side and leave at the other.
        std::size_t e = k;
        while (e < walk.size() && walk[e].col != 0 && walk[e].col != n + 1) {
            ++e;
        }
        if (k == 0 || e == walk.size()) {
            return false;
        }
        if (walk[k - 1].col == walk[e].col) {
            return false;
        }
        for (std::size_t t = k; t + 1 < e; ++t) {
            const int dir = walk[e].col == n + 1 ? 1 : -1;
            if (walk[t + 1].col - walk[t].col != dir) {
                return false;
            }
        }
        k = e;
    }
    return true;
}

bool is_single_column_shaped(const AisleGraph &g, const std::vector<VertexId> &walk) {
    const int right = g.inner_cols() + 1;
    return std::none_of(walk.begin(), walk.end(), [&](const VertexId &v) { return v.col == right; });
}

}  // namespace aisle

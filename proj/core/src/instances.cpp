#include "aisle/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace aisle {

std::uint64_t CounterRng::at(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
}

std::array<double, kRewardLevels> zipf_pmf(double theta) {
    if (!(theta >= 0.0)) {
        throw std::invalid_argument("zipf theta must be >= 0");
    }
    std::array<double, kRewardLevels> pmf{};
    double total = 0.0;
    for (int v = 0; v < kRewardLevels; ++v) {
        pmf[static_cast<std::size_t>(v)] = std::pow(static_cast<double>(v + 1), -theta);
        total += pmf[static_cast<std::size_t>(v)];
    }
    for (double &p : pmf) {
        p /= total;
    }
    return pmf;
}

int zipf_sample(const std::array<double, kRewardLevels> &pmf, double u) {
    double cdf = 0.0;
    for (int v = 0; v < kRewardLevels; ++v) {
        cdf += pmf[static_cast<std::size_t>(v)];
        if (u < cdf) {
            return v;
        }
    }
    return kRewardLevels - 1;
}

AisleGraph gen_zipf(const GenConfig &cfg) {
    if (cfg.m < 1 || cfg.n < 1) {
        throw std::invalid_argument("generator needs m >= 1 and n >= 1");
    }
    if (cfg.block < 1) {
        throw std::invalid_argument("block side must be >= 1");
    }
    const auto pmf = zipf_pmf(cfg.theta);
    const CounterRng rng(cfg.seed);
    const int tiles_down = (cfg.m + cfg.block - 1) / cfg.block;
    const int tiles_across = (cfg.n + cfg.block - 1) / cfg.block;

    std::vector<double> rewards(static_cast<std::size_t>(cfg.m) * static_cast<std::size_t>(cfg.n));
    for (int ti = 0; ti < tiles_down; ++ti) {
        for (int tj = 0; tj < tiles_across; ++tj) {
            const auto counter = static_cast<std::uint64_t>(ti) * static_cast<std::uint64_t>(tiles_across) +
                                 static_cast<std::uint64_t>(tj);
            const double value = zipf_sample(pmf, rng.uniform(counter));
            for (int i = ti * cfg.block; i < std::min(cfg.m, (ti + 1) * cfg.block); ++i) {
                for (int j = tj * cfg.block; j < std::min(cfg.n, (tj + 1) * cfg.block); ++j) {
                    rewards[static_cast<std::size_t>(i) * cfg.n + j] = value;
                }
            }
        }
    }
    return AisleGraph(cfg.m, cfg.n, Variant::TwoSided, std::move(rewards));
}

AisleGraph gen_adversarial(int m, double epsilon) {
    return gen_adversarial(m, epsilon, adversarial_default_apex(m));
}

AisleGraph gen_adversarial(int m, double epsilon, double apex_reward) {
    if (m < 4) {
        throw std::invalid_argument("adversarial instance needs m >= 4");
    }
    if (!(epsilon > 0.0 && epsilon < 2.0)) {
        throw std::invalid_argument("adversarial epsilon must lie in (0, 2)");
    }
    if (!(apex_reward >= 0.0)) {
        throw std::invalid_argument("apex reward must be non-negative");
    }
    const int n = m;
    std::vector<double> rewards(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0.0);
    for (int i = 1; i <= m - 1; ++i) {
        rewards[static_cast<std::size_t>(i - 1) * n + 1] = 2.0 * i - epsilon;
    }
    rewards[static_cast<std::size_t>(m - 1) * n + static_cast<std::size_t>(m - 3)] = apex_reward;
    return AisleGraph(m, n, Variant::TwoSided, std::move(rewards));
}

ParseError::ParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

namespace {

bool next_content_line(std::istream &is, std::string &line, int &lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

}  // namespace

AisleGraph read_instance(std::istream &is) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(is, line, lineno)) {
        throw ParseError(lineno + 1, "missing header 'm n variant'");
    }
    std::istringstream header(line);
    int m = 0;
    int n = 0;
    std::string variant_text;
    std::string extra;
    if (!(header >> m >> n >> variant_text) || (header >> extra)) {
        throw ParseError(lineno, "header must be 'm n variant'");
    }
    if (m < 1 || n < 1) {
        throw ParseError(lineno, "m and n must be positive");
    }
    Variant variant{};
    try {
        variant = parse_variant(variant_text);
    } catch (const std::invalid_argument &e) {
        throw ParseError(lineno, e.what());
    }

    std::vector<double> rewards;
    rewards.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int i = 1; i <= m; ++i) {
        if (!next_content_line(is, line, lineno)) {
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " reward rows, found " +
                                             std::to_string(i - 1));
        }
        std::istringstream row(line);
        std::string tok;
        int count = 0;
        while (row >> tok) {
            double value = 0.0;
            std::size_t used = 0;
            try {
                value = std::stod(tok, &used);
            } catch (const std::exception &) {
                throw ParseError(lineno, "bad reward '" + tok + "'");
            }
            if (used != tok.size() || !std::isfinite(value)) {
                throw ParseError(lineno, "bad reward '" + tok + "'");
            }
            if (value < 0.0) {
                throw ParseError(lineno, "negative reward '" + tok + "'");
            }
            rewards.push_back(value);
            ++count;
        }
        if (count != n) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " rewards, found " +
                                         std::to_string(count));
        }
    }
    if (next_content_line(is, line, lineno)) {
        throw ParseError(lineno, "unexpected content after the last reward row");
    }
    return AisleGraph(m, n, variant, std::move(rewards));
}

void write_instance(std::ostream &os, const AisleGraph &g) {
    os << g.rows() << ' ' << g.inner_cols() << ' ' << to_string(g.variant()) << '\n';
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (int i = 1; i <= g.rows(); ++i) {
        for (int j = 1; j <= g.inner_cols(); ++j) {
            if (j > 1) {
                os << ' ';
            }
            os << g.inner(i, j);
        }
        os << '\n';
    }
}

AisleGraph load_instance(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file " + path.string());
    }
    try {
        return read_instance(in);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), path.string() + ": " + e.detail());
    }
}

void save_instance(const AisleGraph &g, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write instance file " + path.string());
    }
    write_instance(out, g);
    if (!out) {
        throw std::runtime_error("failed writing instance file " + path.string());
    }
}

}  // namespace aisle

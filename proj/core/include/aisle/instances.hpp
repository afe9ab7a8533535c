#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "aisle/graph.hpp"

namespace aisle {

// Counter-based generator (SplitMix64 over seed + k * golden gamma): the k-th
// draw depends only on (seed, k), so output is identical on every platform.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t counter) const;
    // Uniform in [0, 1) from the top 53 bits of at(counter).
    double uniform(std::uint64_t counter) const;

    std::uint64_t next() { return at(counter_++); }
    double next_uniform() { return uniform(counter_++); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

inline constexpr int kRewardLevels = 100;

// P(v) proportional to (v+1)^-theta over v = 0..99; theta = 0 is uniform.
std::array<double, kRewardLevels> zipf_pmf(double theta);
// Inverse CDF lookup of u in [0,1).
int zipf_sample(const std::array<double, kRewardLevels> &pmf, double u);

struct GenConfig {
    int m = 100;
    int n = 50;
    double theta = 0.0;
    int block = 5;
    std::uint64_t seed = 1;
};

// One draw per block x block tile (row-major over tiles), tiles clipped at the
// graph boundary; every vertex of a tile gets the tile's value.
AisleGraph gen_zipf(const GenConfig &cfg);

// The hand-made family on which full-row and greedy tours fall far behind the
// single-column optimum: n = m, r(i,2) = 2i - epsilon for i < m, one apex
// reward at (m, m-2), zero elsewhere.
AisleGraph gen_adversarial(int m, double epsilon);
AisleGraph gen_adversarial(int m, double epsilon, double apex_reward);
inline double adversarial_default_apex(int m) { return 3.0 * m - 5.0; }
inline int adversarial_budget(int m) { return 2 * (m - 2) + 2 * (m - 1); }

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what);
    int line() const { return line_; }
    const std::string &detail() const { return detail_; }

private:
    int line_;
    std::string detail_;
};

// Text format: "m n variant" header, then m lines of n rewards.
AisleGraph read_instance(std::istream &is);
void write_instance(std::ostream &os, const AisleGraph &g);
AisleGraph load_instance(const std::filesystem::path &path);
void save_instance(const AisleGraph &g, const std::filesystem::path &path);

}  // namespace aisle

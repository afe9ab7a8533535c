#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace aisle {

// Budget sweep harness: random instances per (shape, theta, seed), every
// algorithm at every budget step, reward reported as a fraction of the
// instance's total reward.

struct Shape {
    int m = 100;
    int n = 50;

    std::string label() const;
    friend bool operator==(const Shape &, const Shape &) = default;
};

struct BenchmarkConfig {
    std::vector<Shape> shapes{{100, 50}, {50, 100}};
    std::vector<double> thetas{0.0, 0.8, 1.9, 2.7};
    int seeds_per_cell = 30;
    int budget_steps = 20;
    std::vector<std::string> algorithms{"ofr", "ofr_i", "osc", "h1", "hgc", "gfr", "gpr"};
    std::filesystem::path output = "results";
    int block = 5;
    std::uint64_t base_seed = 2020;
    // Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    // Extra instance files swept alongside the generated ones. Their records
    // carry theta = -1 and the file stem as shape.
    std::vector<std::filesystem::path> instance_files;

    // Throws std::invalid_argument on out-of-range fields or unknown algorithms.
    void validate() const;
};

// key=value lines, '#' starts a comment. Keys: shapes (e.g. 100x50,50x100),
// thetas, seeds_per_cell, budget_steps, algorithms, output, block, seed,
// threads, instances.
BenchmarkConfig parse_benchmark_config(std::istream &is);
BenchmarkConfig load_benchmark_config(const std::filesystem::path &path);

struct ResultRecord {
    std::string shape;
    double theta = 0.0;
    int seed = 0;
    std::string algorithm;
    int budget = 0;
    double budget_fraction = 0.0;
    double reward = 0.0;
    double total_reward = 0.0;
    double reward_fraction = 0.0;
    long long runtime_microseconds = 0;
    bool tour_valid = true;
};

struct AggregateRow {
    std::string shape;
    double theta = 0.0;
    int budget = 0;
    double budget_fraction = 0.0;
    std::string algorithm;
    double mean = 0.0;
    double ci95 = 0.0;
    int samples = 0;
};

struct BenchmarkRun {
    std::vector<ResultRecord> records;
    std::vector<AggregateRow> aggregate;
};

// `steps` budgets from 2(n+1) (one row out and back) to (n+1)m + 2(m-1)
// (every row), inclusive, rounded, duplicates removed.
std::vector<int> budget_grid(int m, int n, int steps);

// Seed of the instance for (shape, theta, seed index) under base_seed.
std::uint64_t instance_seed(std::uint64_t base_seed, const Shape &shape, double theta, int seed_index);

class InvalidTourError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws InvalidTourError naming the cell if any emitted tour fails validation.
BenchmarkRun run_benchmark(const BenchmarkConfig &cfg);

// Mean and 1.96 * sample stddev / sqrt(k) per (shape, theta, budget, algorithm).
std::vector<AggregateRow> aggregate_records(const std::vector<ResultRecord> &records);

// Sorted by (shape, theta, seed, budget, algorithm).
void sort_records(std::vector<ResultRecord> &records);

void write_raw_csv(std::ostream &os, const std::vector<ResultRecord> &records);
void write_aggregate_csv(std::ostream &os, const std::vector<AggregateRow> &rows);
void write_timing_csv(std::ostream &os, const std::vector<ResultRecord> &records);

// Writes raw.csv and aggregate.csv (byte-deterministic for equal records) and
// timing.csv (wall-clock, not deterministic) into `dir`.
void emit_results(const std::vector<ResultRecord> &records, const std::filesystem::path &dir);

}  // namespace aisle

#include "aisle/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "aisle/graph.hpp"
#include "aisle/heuristics.hpp"
#include "aisle/instances.hpp"

namespace aisle {

std::string Shape::label() const { return "A(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void BenchmarkConfig::validate() const {
    if (budget_steps < 2) {
        throw std::invalid_argument("budget_steps must be >= 2");
    }
    if (seeds_per_cell < 1) {
        throw std::invalid_argument("seeds_per_cell must be >= 1");
    }
    if (block < 1) {
        throw std::invalid_argument("block must be >= 1");
    }
    for (const Shape &s : shapes) {
        if (s.m < 1 || s.n < 1) {
            throw std::invalid_argument("shape " + s.label() + " is empty");
        }
    }
    for (double t : thetas) {
        if (!(t >= 0.0)) {
            throw std::invalid_argument("theta must be >= 0");
        }
    }
    if (algorithms.empty()) {
        throw std::invalid_argument("no algorithms configured");
    }
    for (const std::string &a : algorithms) {
        const auto &known = algorithm_names();
        if (std::find(known.begin(), known.end(), a) == known.end()) {
            throw std::invalid_argument("unknown algorithm '" + a + "'");
        }
    }
}

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <class T>
T parse_number(const std::string &text, int lineno) {
    std::istringstream is(text);
    T value{};
    std::string rest;
    if (!(is >> value) || (is >> rest)) {
        throw ParseError(lineno, "bad number '" + text + "'");
    }
    return value;
}

Shape parse_shape(const std::string &text, int lineno) {
    const auto x = text.find('x');
    if (x == std::string::npos) {
        throw ParseError(lineno, "shape must look like MxN, got '" + text + "'");
    }
    return Shape{parse_number<int>(text.substr(0, x), lineno), parse_number<int>(text.substr(x + 1), lineno)};
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

BenchmarkConfig parse_benchmark_config(std::istream &is) {
    BenchmarkConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(lineno, "expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "shapes") {
            cfg.shapes.clear();
            for (const auto &s : split_list(value)) {
                cfg.shapes.push_back(parse_shape(s, lineno));
            }
        } else if (key == "thetas") {
            cfg.thetas.clear();
            for (const auto &s : split_list(value)) {
                cfg.thetas.push_back(parse_number<double>(s, lineno));
            }
        } else if (key == "seeds_per_cell") {
            cfg.seeds_per_cell = parse_number<int>(value, lineno);
        } else if (key == "budget_steps") {
            cfg.budget_steps = parse_number<int>(value, lineno);
        } else if (key == "algorithms") {
            cfg.algorithms = split_list(value);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "block") {
            cfg.block = parse_number<int>(value, lineno);
        } else if (key == "seed") {
            cfg.base_seed = parse_number<std::uint64_t>(value, lineno);
        } else if (key == "threads") {
            cfg.threads = parse_number<unsigned>(value, lineno);
        } else if (key == "instances") {
            cfg.instance_files.clear();
            for (const auto &s : split_list(value)) {
                cfg.instance_files.emplace_back(s);
            }
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(lineno, e.what());
    }
    return cfg;
}

BenchmarkConfig load_benchmark_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    BenchmarkConfig cfg = parse_benchmark_config(in);
    // Relative instance paths are taken relative to the config file.
    for (auto &p : cfg.instance_files) {
        if (p.is_relative()) {
            p = path.parent_path() / p;
        }
    }
    return cfg;
}

std::vector<int> budget_grid(int m, int n, int steps) {
    if (steps < 2) {
        throw std::invalid_argument("budget grid needs at least 2 steps");
    }
    const int lo = 2 * (n + 1);
    // For m = 1 the cover formula drops below one out-and-back row.
    const int hi = std::max(lo, (n + 1) * m + 2 * (m - 1));
    std::vector<int> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double x = lo + (static_cast<double>(hi) - lo) * k / (steps - 1);
        const int b = static_cast<int>(std::lround(x));
        if (std::find(grid.begin(), grid.end(), b) == grid.end()) {
            grid.push_back(b);
        }
    }
    return grid;
}

std::uint64_t instance_seed(std::uint64_t base_seed, const Shape &shape, double theta, int seed_index) {
    std::uint64_t h = CounterRng(base_seed).at(static_cast<std::uint64_t>(shape.m));
    h = CounterRng(h).at(static_cast<std::uint64_t>(shape.n));
    h = CounterRng(h).at(std::bit_cast<std::uint64_t>(theta));
    return CounterRng(h).at(static_cast<std::uint64_t>(seed_index));
}

namespace {

struct Task {
    std::string shape;
    double theta = 0.0;
    int seed = 0;
    // Either generated from (dims, seed) or loaded from file.
    GenConfig gen;
    std::filesystem::path file;
};

std::vector<ResultRecord> run_task(const Task &task, const BenchmarkConfig &cfg) {
    const AisleGraph g = task.file.empty() ? gen_zipf(task.gen) : load_instance(task.file);
    const double total = g.total_reward();
    const std::vector<int> budgets = budget_grid(g.rows(), g.inner_cols(), cfg.budget_steps);
    const int max_budget = budgets.back();

    std::vector<ResultRecord> out;
    out.reserve(budgets.size() * cfg.algorithms.size());
    for (int budget : budgets) {
        for (const std::string &algo : cfg.algorithms) {
            const auto start = std::chrono::steady_clock::now();
            const SolveResult res = run_algorithm(algo, g, budget);
            const auto stop = std::chrono::steady_clock::now();

            const ValidationReport rep = validate_tour(g, res.tour, budget);
            if (!rep.passed()) {
                std::string why = rep.violations.empty() ? "unknown" : rep.violations.front();
                throw InvalidTourError("invalid tour from " + algo + " on " + task.shape + " theta=" +
                                       fixed(task.theta, 2) + " seed=" + std::to_string(task.seed) +
                                       " budget=" + std::to_string(budget) + ": " + why);
            }

            ResultRecord r;
            r.shape = task.shape;
            r.theta = task.theta;
            r.seed = task.seed;
            r.algorithm = algo;
            r.budget = budget;
            r.budget_fraction = static_cast<double>(budget) / max_budget;
            r.reward = res.reward;
            r.total_reward = total;
            r.reward_fraction = total > 0.0 ? res.reward / total : 0.0;
            r.runtime_microseconds =
                std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
            r.tour_valid = true;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

void sort_records(std::vector<ResultRecord> &records) {
    std::stable_sort(records.begin(), records.end(), [](const ResultRecord &a, const ResultRecord &b) {
        return std::tie(a.shape, a.theta, a.seed, a.budget, a.algorithm) <
               std::tie(b.shape, b.theta, b.seed, b.budget, b.algorithm);
    });
}

BenchmarkRun run_benchmark(const BenchmarkConfig &cfg) {
    cfg.validate();

    std::vector<Task> tasks;
    for (const Shape &shape : cfg.shapes) {
        for (double theta : cfg.thetas) {
            for (int s = 0; s < cfg.seeds_per_cell; ++s) {
                Task t;
                t.shape = shape.label();
                t.theta = theta;
                t.seed = s;
                t.gen = GenConfig{shape.m, shape.n, theta, cfg.block, instance_seed(cfg.base_seed, shape, theta, s)};
                tasks.push_back(std::move(t));
            }
        }
    }
    for (std::size_t k = 0; k < cfg.instance_files.size(); ++k) {
        Task t;
        t.shape = cfg.instance_files[k].stem().string();
        t.theta = -1.0;
        t.seed = static_cast<int>(k);
        t.file = cfg.instance_files[k];
        tasks.push_back(std::move(t));
    }

    std::vector<std::vector<ResultRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) {
                return;
            }
            try {
                slots[k] = run_task(tasks[k], cfg);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(tasks.size());
                return;
            }
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    BenchmarkRun run;
    for (auto &slot : slots) {
        run.records.insert(run.records.end(), std::make_move_iterator(slot.begin()),
                           std::make_move_iterator(slot.end()));
    }
    sort_records(run.records);
    run.aggregate = aggregate_records(run.records);
    return run;
}

std::vector<AggregateRow> aggregate_records(const std::vector<ResultRecord> &records) {
    using Key = std::tuple<std::string, double, int, std::string>;
    struct Acc {
        double budget_fraction = 0.0;
        std::vector<double> values;
    };
    std::map<Key, Acc> groups;
    for (const ResultRecord &r : records) {
        Acc &acc = groups[Key{r.shape, r.theta, r.budget, r.algorithm}];
        acc.budget_fraction = r.budget_fraction;
        acc.values.push_back(r.reward_fraction);
    }

    std::vector<AggregateRow> rows;
    rows.reserve(groups.size());
    for (const auto &[key, acc] : groups) {
        AggregateRow row;
        std::tie(row.shape, row.theta, row.budget, row.algorithm) = key;
        row.budget_fraction = acc.budget_fraction;
        row.samples = static_cast<int>(acc.values.size());
        double sum = 0.0;
        for (double v : acc.values) {
            sum += v;
        }
        row.mean = sum / row.samples;
        if (row.samples > 1) {
            double sq = 0.0;
            for (double v : acc.values) {
                sq += (v - row.mean) * (v - row.mean);
            }
            const double sd = std::sqrt(sq / (row.samples - 1));
            row.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(row.samples));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_raw_csv(std::ostream &os, const std::vector<ResultRecord> &records) {
    os << "shape,theta,seed,algorithm,budget,budget_fraction,reward,total_reward,reward_fraction,tour_valid\n";
    for (const ResultRecord &r : records) {
        os << '"' << r.shape << "\"," << fixed(r.theta, 2) << ',' << r.seed << ',' << r.algorithm << ','
           << r.budget << ',' << fixed(r.budget_fraction, 6) << ',' << fixed(r.reward, 6) << ','
           << fixed(r.total_reward, 6) << ',' << fixed(r.reward_fraction, 6) << ','
           << (r.tour_valid ? "true" : "false") << '\n';
    }
}

void write_aggregate_csv(std::ostream &os, const std::vector<AggregateRow> &rows) {
    os << "shape,theta,budget_fraction,algorithm,mean,ci95\n";
    for (const AggregateRow &r : rows) {
        os << '"' << r.shape << "\"," << fixed(r.theta, 2) << ',' << fixed(r.budget_fraction, 6) << ','
           << r.algorithm << ',' << fixed(r.mean, 6) << ',' << fixed(r.ci95, 6) << '\n';
    }
}

void write_timing_csv(std::ostream &os, const std::vector<ResultRecord> &records) {
    os << "shape,theta,seed,algorithm,budget,runtime_microseconds\n";
    for (const ResultRecord &r : records) {
        os << '"' << r.shape << "\"," << fixed(r.theta, 2) << ',' << r.seed << ',' << r.algorithm << ','
           << r.budget << ',' << r.runtime_microseconds << '\n';
    }
}

namespace {

template <class Fn>
void write_file(const std::filesystem::path &path, Fn &&fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    fn(out);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace

void emit_results(const std::vector<ResultRecord> &records, const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    std::vector<ResultRecord> sorted = records;
    sort_records(sorted);
    const std::vector<AggregateRow> agg = aggregate_records(sorted);
    write_file(dir / "raw.csv", [&](std::ostream &os) { write_raw_csv(os, sorted); });
    write_file(dir / "aggregate.csv", [&](std::ostream &os) { write_aggregate_csv(os, agg); });
    write_file(dir / "timing.csv", [&](std::ostream &os) { write_timing_csv(os, sorted); });
}

}  // namespace aisle

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aisle/benchmark.hpp"
#include "aisle/full_row.hpp"
#include "aisle/heuristics.hpp"
#include "aisle/instances.hpp"
#include "aisle/oracles.hpp"
#include "aisle/single_column.hpp"

namespace fs = std::filesystem;
using namespace aisle;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int uniform_int(std::mt19937_64 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

AisleGraph zipf_instance(std::mt19937_64 &rng, int m, int n, double theta) {
    return gen_zipf({m, n, theta, 1, rng()});
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

Outcome criterion1() {
    std::mt19937_64 rng(101);
    int checks = 0;
    for (int k = 0; k < 200; ++k) {
        const int m = uniform_int(rng, 1, 10);
        const int n = uniform_int(rng, 1, 6);
        const double theta = k % 2 == 0 ? 0.0 : 1.9;
        const AisleGraph g = zipf_instance(rng, m, n, theta);
        for (int b : budget_grid(m, n, 8)) {
            const double ofr = solve_ofr(g, b).reward;
            const double ofr_i = solve_ofr_i(g, b).reward;
            const double oracle = oracle_cop_fr(g, b);
            ++checks;
            if (ofr != oracle || ofr_i != oracle) {
                return {false, "A(" + std::to_string(m) + "," + std::to_string(n) + ") B=" + std::to_string(b) +
                                   " ofr=" + fmt(ofr) + " ofr_i=" + fmt(ofr_i) + " oracle=" + fmt(oracle)};
            }
        }
    }
    return {true, std::to_string(checks) + " (instance, budget) pairs"};
}

Outcome criterion2() {
    std::mt19937_64 rng(202);
    int checks = 0;
    for (int k = 0; k < 200; ++k) {
        const int m = uniform_int(rng, 1, 8);
        const int n = uniform_int(rng, 1, 6);
        const AisleGraph g = zipf_instance(rng, m, n, k % 2 == 0 ? 0.0 : 1.9).as_left_only();
        const int b_max = 2 * n * m + 2 * (m - 1);
        const std::vector<double> profile = oracle_cop_sc_profile(g, b_max);
        for (int b = 0; b <= b_max; b += 2) {
            const OscSolution s = solve_osc(g, b);
            const double table_optimum = osc_reward_profile(s.tables).back();
            const double traced = tour_reward(g, osc_traceback(s.tables, g).tour);
            ++checks;
            if (s.result.reward != profile[b] || traced != table_optimum) {
                return {false, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " B=" + std::to_string(b) +
                                   " osc=" + fmt(s.result.reward) + " oracle=" + fmt(profile[b]) +
                                   " traced=" + fmt(traced) + " table=" + fmt(table_optimum)};
            }
        }
    }
    return {true, std::to_string(checks) + " (instance, budget) pairs"};
}

Outcome criterion3() {
    std::mt19937_64 rng(303);
    int fr_shaped = 0;
    int sc_shaped = 0;
    for (int k = 0; k < 50; ++k) {
        const int m = uniform_int(rng, 1, 4);
        const int n = uniform_int(rng, 1, 12 / m);
        const AisleGraph g = zipf_instance(rng, m, n, k % 2 == 0 ? 0.0 : 1.9);
        const int b = uniform_int(rng, 0, 40);
        const CopOracleResult oracle = oracle_cop(g, b);
        const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " B=" + std::to_string(b);
        for (std::string_view name : algorithm_names()) {
            const double r = run_algorithm(name, g, b).reward;
            if (r > oracle.reward) {
                return {false, std::string(name) + " exceeds oracle at " + cell};
            }
        }
        if (is_full_row_shaped(g, oracle.witness)) {
            ++fr_shaped;
            if (solve_ofr(g, b).reward != oracle.reward) {
                return {false, "ofr below full-row shaped optimum at " + cell};
            }
        }
        if (is_single_column_shaped(g, oracle.witness)) {
            ++sc_shaped;
            if (solve_osc(g, b).result.reward != oracle.reward) {
                return {false, "osc below single-column shaped optimum at " + cell};
            }
        }
    }
    return {true, "full-row shaped witnesses " + std::to_string(fr_shaped) + ", single-column shaped " +
                      std::to_string(sc_shaped)};
}

Outcome criterion4() {
    std::mt19937_64 rng(404);
    const double thetas[] = {0.0, 0.8, 1.9, 2.7};
    for (int k = 0; k < 500; ++k) {
        const int m = uniform_int(rng, 1, 40);
        const int n = uniform_int(rng, 1, 30);
        const double theta = thetas[k % 4];
        const AisleGraph g = gen_zipf({m, n, theta, uniform_int(rng, 1, 5), rng()});
        const int b = uniform_int(rng, 0, (n + 1) * m + 2 * (m - 1) + 10);
        const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " B=" + std::to_string(b);
        std::map<std::string, double> reward;
        for (std::string_view name : algorithm_names()) {
            const SolveResult r = run_algorithm(name, g, b);
            if (!validate_tour(g, r.tour, b).passed()) {
                return {false, std::string(name) + " emitted an invalid tour at " + cell};
            }
            reward[std::string(name)] = r.reward;
        }
        if (reward["h1"] < reward["ofr_i"]) {
            return {false, "h1 < ofr_i at " + cell};
        }
        for (const char *c : {"h1", "h2", "h3", "ofr_i", "osc"}) {
            if (reward["hgc"] < reward[c]) {
                return {false, std::string("hgc < ") + c + " at " + cell};
            }
        }
    }
    return {true, "500 instances, 0 violations"};
}

Outcome criterion5() {
    std::mt19937_64 rng(505);
    std::size_t worst = 0;
    for (int k = 0; k < 20; ++k) {
        const AisleGraph g = gen_zipf({2000, 20, k % 2 == 0 ? 0.0 : 1.9, 5, rng()});
        const int b = uniform_int(rng, 42, 21 * 2000 + 2 * 1999);
        OfrIStats stats;
        solve_ofr_i(g, b, &stats);
        worst = std::max(worst, stats.scanned);
        if (stats.scanned > 2000) {
            return {false, "scanned " + std::to_string(stats.scanned) + " at B=" + std::to_string(b)};
        }
    }
    return {true, "max scanned " + std::to_string(worst)};
}

using MeanTable = std::map<std::tuple<std::string, double, int, std::string>, AggregateRow>;

MeanTable index_aggregate(const std::vector<AggregateRow> &rows) {
    MeanTable t;
    for (const AggregateRow &r : rows) {
        t[{r.shape, r.theta, r.budget, r.algorithm}] = r;
    }
    return t;
}

std::vector<int> budgets_of(const std::vector<AggregateRow> &rows, const std::string &shape, double theta) {
    std::vector<int> out;
    for (const AggregateRow &r : rows) {
        if (r.shape == shape && r.theta == theta && r.algorithm == "ofr") {
            out.push_back(r.budget);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Budget step whose budget_fraction is nearest 0.5; ties go to the smaller budget.
int mid_budget(const MeanTable &t, const std::vector<int> &budgets, const std::string &shape, double theta) {
    int best = budgets.front();
    double best_gap = 2.0;
    for (int b : budgets) {
        const double gap = std::abs(t.at({shape, theta, b, "ofr"}).budget_fraction - 0.5);
        if (gap < best_gap) {
            best_gap = gap;
            best = b;
        }
    }
    return best;
}

Outcome criterion6(const std::vector<AggregateRow> &rows) {
    const MeanTable t = index_aggregate(rows);
    Outcome out;
    for (const std::string shape : {"A(50,100)", "A(100,50)"}) {
        const auto budgets = budgets_of(rows, shape, 1.9);
        if (budgets.empty()) {
            return {false, "no records for " + shape};
        }
        const int b = mid_budget(t, budgets, shape, 1.9);
        const AggregateRow &r = t.at({shape, 1.9, b, "ofr"});
        out.pass = out.pass && r.mean > 0.65;
        out.detail += shape + " B=" + std::to_string(b) + " (fraction " + fmt(r.budget_fraction) +
                      ") mean ofr=" + fmt(r.mean) + " +/- " + fmt(r.ci95) + "; ";
    }
    return out;
}

Outcome criterion7(const std::vector<AggregateRow> &rows) {
    const MeanTable t = index_aggregate(rows);
    Outcome out;
    for (const std::string shape : {"A(50,100)", "A(100,50)"}) {
        const auto budgets = budgets_of(rows, shape, 0.0);
        if (budgets.empty()) {
            return {false, "no records for " + shape};
        }
        for (int b : budgets) {
            auto mean = [&](const char *alg) { return t.at({shape, 0.0, b, alg}).mean; };
            const double hgc = mean("hgc");
            const double ofr = mean("ofr");
            const double gfr = mean("gfr");
            const double osc = mean("osc");
            if (!(hgc >= ofr && ofr >= gfr && hgc >= osc)) {
                out.pass = false;
                out.detail += shape + " B=" + std::to_string(b) + " hgc=" + fmt(hgc) + " ofr=" + fmt(ofr) +
                              " gfr=" + fmt(gfr) + " osc=" + fmt(osc) + "; ";
            }
        }
        const int mid = mid_budget(t, budgets, shape, 0.0);
        const double osc = t.at({shape, 0.0, mid, "osc"}).mean;
        const double ofr = t.at({shape, 0.0, mid, "ofr"}).mean;
        if (!(osc < ofr)) {
            out.pass = false;
        }
        out.detail += shape + " mid B=" + std::to_string(mid) + " osc=" + fmt(osc) + " ofr=" + fmt(ofr) + "; ";
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    double prev_gap = -1.0;
    for (int m : {10, 20}) {
        const AisleGraph g = gen_adversarial(m, 0.5);
        const int b = adversarial_budget(m);
        const double sc = oracle_cop_sc(g, b);
        const double ofr = solve_ofr(g, b).reward;
        const double osc = solve_osc(g, b).result.reward;
        const double hgc = solve_hgc(g, b).reward;
        const double gap = sc - ofr;
        out.pass = out.pass && sc >= ofr && hgc >= osc && gap > prev_gap;
        prev_gap = gap;
        out.detail += "m=" + std::to_string(m) + " B=" + std::to_string(b) + " oracle_sc=" + fmt(sc) +
                      " ofr=" + fmt(ofr) + " osc=" + fmt(osc) + " hgc=" + fmt(hgc) + " gap=" + fmt(gap) + "; ";
    }
    return out;
}

Outcome criterion9(const fs::path &first, const fs::path &second) {
    Outcome out;
    for (const char *file : {"raw.csv", "aggregate.csv"}) {
        const std::string a = slurp(first / file);
        const std::string b = slurp(second / file);
        const bool same = !a.empty() && a == b;
        out.pass = out.pass && same;
        out.detail += std::string(file) + (same ? " identical" : " differs") + " (" + std::to_string(a.size()) +
                      " bytes); ";
    }
    return out;
}

bool report(int id, const std::function<Outcome()> &check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " [" << fmt(secs)
              << " s]" << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char **argv) {
    fs::path workdir = fs::temp_directory_path() / "aisle_acceptance";
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--workdir" && k + 1 < argc) {
            workdir = argv[++k];
        } else {
            std::cerr << "usage: aisle_acceptance [--workdir DIR]\n";
            return 2;
        }
    }

    bool ok = true;
    ok &= report(1, criterion1);
    ok &= report(2, criterion2);
    ok &= report(3, criterion3);
    ok &= report(4, criterion4);
    ok &= report(5, criterion5);

    // The default sweep covers theta 0 and 1.9 with 30 seeds and 20 steps, so
    // its first execution also serves criteria 6 and 7.
    const BenchmarkConfig cfg;
    const fs::path first = workdir / "run1";
    const fs::path second = workdir / "run2";
    std::vector<AggregateRow> aggregate;
    try {
        fs::remove_all(workdir);
        BenchmarkRun run = run_benchmark(cfg);
        emit_results(run.records, first);
        aggregate = std::move(run.aggregate);
    } catch (const std::exception &e) {
        std::cout << "benchmark run failed: " << e.what() << std::endl;
    }
    ok &= report(6, [&] { return criterion6(aggregate); });
    ok &= report(7, [&] { return criterion7(aggregate); });
    ok &= report(8, criterion8);
    ok &= report(9, [&] {
        emit_results(run_benchmark(cfg).records, second);
        return criterion9(first, second);
    });
    return ok ? 0 : 1;
}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aisle/benchmark.hpp"
#include "aisle/full_row.hpp"
#include "aisle/graph.hpp"
#include "aisle/heuristics.hpp"
#include "aisle/instances.hpp"
#include "aisle/oracles.hpp"
#include "aisle/single_column.hpp"

namespace {

using namespace aisle;

struct GenerateArgs {
    GenConfig cfg;
    bool adversarial = false;
    double epsilon = 0.5;
    std::optional<double> apex;
    std::string out;
};

int run_generate(const GenerateArgs &a) {
    AisleGraph g = a.adversarial
                       ? gen_adversarial(a.cfg.m, a.epsilon, a.apex.value_or(adversarial_default_apex(a.cfg.m)))
                       : gen_zipf(a.cfg);
    if (a.out.empty() || a.out == "-") {
        write_instance(std::cout, g);
    } else {
        save_instance(g, a.out);
    }
    if (a.adversarial) {
        std::cerr << "budget " << adversarial_budget(a.cfg.m) << '\n';
    }
    return 0;
}

struct SolveArgs {
    std::string instance;
    std::string algorithm;
    int budget = 0;
    bool emit_tour = false;
    std::string dump_r;
};

int run_solve(const SolveArgs &a) {
    const AisleGraph g = load_instance(a.instance);
    const SolveResult res = run_algorithm(a.algorithm, g, a.budget);
    const ValidationReport rep = validate_tour(g, res.tour, a.budget);
    std::printf("algorithm %s\nreward %.6f\nbudget_used %d\nbudget_limit %d\nvalid %s\n", res.algorithm.c_str(),
                res.reward, res.budget_used, res.budget_limit, rep.passed() ? "true" : "false");
    if (a.emit_tour) {
        std::printf("%s\n", format_tour(res.tour).c_str());
    }
    if (!a.dump_r.empty()) {
        const OscSolution osc = solve_osc(g.two_sided() ? g.as_left_only() : g, a.budget);
        std::ofstream out(a.dump_r);
        if (!out) {
            throw std::runtime_error("cannot write " + a.dump_r);
        }
        write_tables_csv(out, osc.tables);
    }
    return rep.passed() ? 0 : 1;
}

struct ValidateArgs {
    std::string instance;
    std::string tour;
    int budget = 0;
};

int run_validate(const ValidateArgs &a) {
    const AisleGraph g = load_instance(a.instance);
    std::ifstream in(a.tour);
    if (!in) {
        throw std::runtime_error("cannot open tour file " + a.tour);
    }
    std::string line;
    int status = 0;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        ++count;
        const ValidationReport rep = validate_tour(g, parse_tour(line), a.budget);
        std::printf("tour %d: %s cost %d reward %.6f\n", count, rep.passed() ? "PASS" : "FAIL", rep.cost,
                    rep.reward);
        for (const std::string &v : rep.violations) {
            std::printf("  %s\n", v.c_str());
        }
        if (!rep.passed()) {
            status = 1;
        }
    }
    if (count == 0) {
        std::fprintf(stderr, "no tour in %s\n", a.tour.c_str());
        return 1;
    }
    return status;
}

struct OracleArgs {
    std::string instance;
    int budget = 0;
    std::string kind = "cop";
};

int run_oracle(const OracleArgs &a) {
    const AisleGraph g = load_instance(a.instance);
    if (a.kind == "cop") {
        const CopOracleResult res = oracle_cop(g, a.budget);
        std::printf("reward %.6f\n%s\n", res.reward, format_tour(Tour{res.witness}).c_str());
    } else if (a.kind == "fr") {
        std::printf("reward %.6f\n", oracle_cop_fr(g, a.budget));
    } else {
        std::printf("reward %.6f\n", oracle_cop_sc(g, a.budget));
    }
    return 0;
}

int run_bench(const std::string &config_path, const std::string &output) {
    BenchmarkConfig cfg = load_benchmark_config(config_path);
    if (!output.empty()) {
        cfg.output = output;
    }
    const BenchmarkRun run = run_benchmark(cfg);
    emit_results(run.records, cfg.output);
    std::printf("%zu records written to %s\n", run.records.size(), cfg.output.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Orienteering on aisle graphs: solvers, oracles and benchmark sweep"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Write a random or adversarial instance");
    generate->add_option("--m", gen.cfg.m, "Rows")->check(CLI::PositiveNumber);
    generate->add_option("--n", gen.cfg.n, "Inner columns")->check(CLI::PositiveNumber);
    generate->add_option("--theta", gen.cfg.theta, "Zipf skew")->check(CLI::NonNegativeNumber);
    generate->add_option("--block", gen.cfg.block, "Block side")->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.cfg.seed, "Generator seed");
    generate->add_option("--out", gen.out, "Output file (default stdout)");
    generate->add_flag("--adversarial", gen.adversarial, "Build the adversarial family (n = m)");
    generate->add_option("--epsilon", gen.epsilon, "Adversarial epsilon");
    generate->add_option("--apex", gen.apex, "Adversarial apex reward (default 3m-5)");

    SolveArgs solve;
    auto *solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance");
    solve_cmd->add_option("--instance", solve.instance)->required();
    solve_cmd->add_option("--algorithm", solve.algorithm)
        ->required()
        ->check(CLI::IsMember({"ofr", "ofr_i", "osc", "h1", "h2", "h3", "hgc", "gfr", "gpr"}));
    solve_cmd->add_option("--budget", solve.budget)->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--emit-tour", solve.emit_tour, "Print the tour as i:j pairs");
    solve_cmd->add_option("--dump-r", solve.dump_r, "Write the single-column R table as CSV");

    ValidateArgs val;
    auto *validate = app.add_subcommand("validate", "Check the tours in a file (one per line)");
    validate->add_option("--instance", val.instance)->required();
    validate->add_option("--tour", val.tour)->required();
    validate->add_option("--budget", val.budget)->required();

    OracleArgs orc;
    auto *oracle = app.add_subcommand("oracle", "Brute-force optimum on a small instance");
    oracle->add_option("--instance", orc.instance)->required();
    oracle->add_option("--budget", orc.budget)->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--kind", orc.kind)->check(CLI::IsMember({"cop", "fr", "sc"}));

    std::string config_path;
    std::string bench_output;
    auto *bench = app.add_subcommand("benchmark", "Budget sweep over random instances");
    bench->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    bench->add_option("--output", bench_output, "Override the output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            return run_generate(gen);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve);
        }
        if (validate->parsed()) {
            return run_validate(val);
        }
        if (oracle->parsed()) {
            return run_oracle(orc);
        }
        if (bench->parsed()) {
            return run_bench(config_path, bench_output);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

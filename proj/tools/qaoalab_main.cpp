#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qaoalab/qaoalab.hpp"

namespace {

using namespace qaoalab;

int cmd_gen_graph(const std::string& type, int n, int degree, double prob, std::uint64_t seed,
                  const std::string& out_path) {
    const EnsembleKind kind = parse_ensemble_kind(type);
    const Graph g = kind == EnsembleKind::regular ? generate_regular(n, degree, seed)
                                                  : generate_erdos_renyi(n, prob, seed);
    if (out_path.empty()) {
        write_graph(std::cout, g);
    } else {
        save_graph(out_path, g);
        std::cerr << "wrote " << out_path << " (n=" << g.n << ", m=" << g.edge_count() << ")\n";
    }
    return 0;
}

int cmd_maxcut(const std::string& graph_path) {
    const Graph g = load_graph(graph_path);
    const MaxCutSolution sol = max_cut_bruteforce(g);
    std::cout << "n " << g.n << "\n"
              << "m " << g.edge_count() << "\n"
              << "c_max " << sol.c_max << "\n"
              << "witness " << sol.witness << "\n";
    return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& strategy, int p, int trials,
              std::uint64_t seed, int max_evals, int workers) {
    const Graph g = load_graph(graph_path);
    const MaxCutSolution sol = max_cut_bruteforce(g);

    SweepOptions options;
    options.trials_per_depth = trials;
    options.optimizer.max_evals = max_evals;
    options.n_workers = workers > 0 ? workers : resolve_worker_count();

    const StrategyChoice choice = parse_strategy(strategy);
    if (choice == StrategyChoice::both)
        throw std::invalid_argument("solve: pick one strategy, random or pf");
    const std::vector<DepthRecord> records =
        choice == StrategyChoice::random
            ? random_init_sweep(g, sol.c_max, p, seed, options)
            : parameters_fixing_sweep(g, sol.c_max, p, seed, options);

    std::cout << "graph " << graph_path << " n=" << g.n << " m=" << g.edge_count()
              << " c_max=" << sol.c_max << "\n";
    std::cout << join_csv_row({"depth", "best_alpha", "mean_alpha", "std_alpha", "best_f_opt",
                               "best_n_evals"});
    for (const DepthRecord& r : records) {
        std::cout << join_csv_row({std::to_string(r.depth), format_double(r.best_trial.alpha),
                                   format_double(r.mean_alpha), format_double(r.std_alpha),
                                   format_double(r.best_trial.f_opt),
                                   std::to_string(r.best_trial.n_evals)});
    }
    // Flat (gamma_1..gamma_p, beta_1..beta_p) of the deepest best trial,
    // ready to paste into `landscape --prefix`.
    std::cout << "best_params_flat "
              << join_doubles(records.back().best_trial.optimal_params.to_flat(), ',') << "\n";
    return 0;
}

int cmd_experiment(const std::string& config_path, const CLI::App& sub, std::uint64_t seed,
                   const std::string& out_dir, int p_max, int trials, const std::string& strategy,
                   int workers) {
    ExperimentConfig config = parse_config_file(config_path);
    if (sub.count("--seed") > 0) config.master_seed = seed;
    if (sub.count("--out") > 0) config.out_dir = out_dir;
    if (sub.count("--p-max") > 0) config.p_max = p_max;
    if (sub.count("--trials") > 0) config.trials_per_depth = trials;
    if (sub.count("--strategy") > 0) config.strategy = parse_strategy(strategy);
    if (sub.count("--workers") > 0) config.workers = workers;

    const ExperimentReport report = run_experiment(config);
    std::cout << "out_dir " << report.out_dir.string() << "\n";
    for (const std::string& f : report.files) std::cout << "wrote " << f << "\n";
    std::cout << "wrote manifest.json\n";
    return 0;
}

int cmd_landscape(const std::string& graph_path, const std::string& prefix_csv, int resolution,
                  const std::string& out_path) {
    const Graph g = load_graph(graph_path);
    const std::vector<double> flat = split_doubles(prefix_csv, ',');
    const ParameterVector prefix = ParameterVector::from_flat(flat);
    LandscapeGrid grid = landscape_grid(g, prefix, resolution);
    grid.graph_id = std::filesystem::path(graph_path).stem().string();
    if (out_path.empty()) {
        write_landscape_csv(std::cout, grid);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        write_landscape_csv(out, grid);
        std::cerr << "wrote " << out_path << " (depth " << grid.depth << ", " << resolution << "x"
                  << resolution << ", mean " << format_double(grid.mean()) << ")\n";
    }
    return 0;
}

int cmd_compare(const std::string& dir_a, const std::string& dir_b, const std::string& strategy_a,
                const std::string& strategy_b, const std::string& out_path) {
    const auto aggregate_path = [](const std::string& dir, const std::string& strategy) {
        return std::filesystem::path(dir) / ("aggregate_" + strategy + ".csv");
    };
    const auto rows_a = load_aggregate_csv(aggregate_path(dir_a, strategy_a));
    const auto rows_b = load_aggregate_csv(aggregate_path(dir_b, strategy_b));
    const ComparisonSummary summary = compare_aggregates(rows_a, rows_b);
    if (out_path.empty()) {
        write_comparison_csv(std::cout, summary);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        write_comparison_csv(out, summary);
    }
    std::cerr << "a_wins " << summary.a_wins << " b_wins " << summary.b_wins << " ties "
              << summary.ties << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-simulation QAOA Max-Cut laboratory"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-graph", "Generate a seeded random graph");
    std::string gen_type;
    int gen_n = 0;
    int gen_degree = 3;
    double gen_prob = 0.5;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--type", gen_type, "regular or erdos_renyi")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--degree", gen_degree, "degree (regular)");
    gen->add_option("--prob", gen_prob, "edge probability (erdos_renyi)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* maxcut = app.add_subcommand("maxcut", "Exact Max-Cut by enumeration");
    std::string mc_graph;
    maxcut->add_option("--graph", mc_graph, "graph file")->required();

    auto* solve = app.add_subcommand("solve", "Optimize one instance with one strategy");
    std::string sv_graph, sv_strategy;
    int sv_p = 1;
    int sv_trials = 20;
    std::uint64_t sv_seed = 1;
    int sv_max_evals = 1000;
    int sv_workers = 0;
    solve->add_option("--graph", sv_graph, "graph file")->required();
    solve->add_option("--strategy", sv_strategy, "random or pf")->required();
    solve->add_option("--p", sv_p, "target depth")->required();
    solve->add_option("--trials", sv_trials, "trials per depth");
    solve->add_option("--seed", sv_seed, "master seed");
    solve->add_option("--max-evals", sv_max_evals, "optimizer evaluation budget");
    solve->add_option("--workers", sv_workers, "worker threads (0 = auto)");

    auto* experiment = app.add_subcommand("experiment", "Run a configured experiment sweep");
    std::string ex_config, ex_out, ex_strategy;
    std::uint64_t ex_seed = 0;
    int ex_p_max = 0;
    int ex_trials = 0;
    int ex_workers = 0;
    experiment->add_option("--config", ex_config, "config file")->required();
    experiment->add_option("--seed", ex_seed, "override master_seed");
    experiment->add_option("--out", ex_out, "override out_dir");
    experiment->add_option("--p-max", ex_p_max, "override p_max");
    experiment->add_option("--trials", ex_trials, "override trials_per_depth");
    experiment->add_option("--strategy", ex_strategy, "override strategy");
    experiment->add_option("--workers", ex_workers, "override workers");

    auto* landscape = app.add_subcommand("landscape", "Evaluate F_p on a (gamma_p, beta_p) grid");
    std::string ls_graph, ls_prefix, ls_out;
    int ls_resolution = 0;
    landscape->add_option("--graph", ls_graph, "graph file")->required();
    landscape->add_option("--prefix", ls_prefix,
                          "fixed prefix, flat comma list (gammas then betas); empty for p=1");
    landscape->add_option("--resolution", ls_resolution, "grid resolution per axis")->required();
    landscape->add_option("--out", ls_out, "output file (default stdout)");

    auto* compare = app.add_subcommand("compare", "Delta of two experiment reports");
    std::string cp_a, cp_b, cp_sa = "random", cp_sb = "pf", cp_out;
    compare->add_option("--a", cp_a, "report directory A")->required();
    compare->add_option("--b", cp_b, "report directory B")->required();
    compare->add_option("--a-strategy", cp_sa, "aggregate to read from A (default random)");
    compare->add_option("--b-strategy", cp_sb, "aggregate to read from B (default pf)");
    compare->add_option("--out", cp_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen_graph(gen_type, gen_n, gen_degree, gen_prob, gen_seed, gen_out);
        if (maxcut->parsed()) return cmd_maxcut(mc_graph);
        if (solve->parsed())
            return cmd_solve(sv_graph, sv_strategy, sv_p, sv_trials, sv_seed, sv_max_evals,
                             sv_workers);
        if (experiment->parsed())
            return cmd_experiment(ex_config, *experiment, ex_seed, ex_out, ex_p_max, ex_trials,
                                  ex_strategy, ex_workers);
        if (landscape->parsed()) return cmd_landscape(ls_graph, ls_prefix, ls_resolution, ls_out);
        if (compare->parsed()) return cmd_compare(cp_a, cp_b, cp_sa, cp_sb, cp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

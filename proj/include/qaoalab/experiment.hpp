#pragma once

#include <cctype>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qaoalab/csv.hpp"
#include "qaoalab/graph.hpp"
#include "qaoalab/nelder_mead.hpp"
#include "qaoalab/parallel.hpp"
#include "qaoalab/rng.hpp"
#include "qaoalab/simulator.hpp"
#include "qaoalab/strategies.hpp"

namespace qaoalab {

enum class EnsembleKind { regular, erdos_renyi };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::regular;
    int degree = 3;         // regular only
    double edge_prob = 0.5; // erdos_renyi only
};

enum class StrategyChoice { random, parameters_fixing, both };

struct ExperimentConfig {
    EnsembleSpec ensemble{};
    std::vector<int> node_counts;
    int instances_per_n = 1;
    int p_max = 1;
    int trials_per_depth = 20;
    StrategyChoice strategy = StrategyChoice::both;
    std::uint64_t master_seed = 1;
    OptimizerOptions optimizer{};
    bool augment_zero_trial = true;
    int workers = 0; // 0: take QAOALAB_WORKERS, falling back to hardware concurrency
    std::string out_dir = "out";
};

struct InstanceRun {
    std::string id;
    int n = 0;
    int occurrence = 0; // k-th instance with this node count, 0-based
    std::uint64_t graph_seed = 0;
    std::uint64_t sweep_seed = 0;
    Graph graph;
    int c_max = 0;
    std::string witness;
    std::vector<DepthRecord> random_records;
    std::vector<DepthRecord> pf_records;
    std::vector<DriftTrack> pf_drift;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<InstanceRun> instances;
    std::filesystem::path out_dir;
    std::vector<std::string> files;
};

inline std::string strategy_name(StrategyChoice s) {
    switch (s) {
        case StrategyChoice::random: return "random";
        case StrategyChoice::parameters_fixing: return "pf";
        case StrategyChoice::both: return "both";
    }
    throw std::logic_error("strategy_name: unreachable");
}

inline StrategyChoice parse_strategy(const std::string& s) {
    if (s == "random") return StrategyChoice::random;
    if (s == "pf" || s == "parameters_fixing") return StrategyChoice::parameters_fixing;
    if (s == "both") return StrategyChoice::both;
    throw std::invalid_argument("unknown strategy '" + s + "' (expected random, pf, or both)");
}

inline std::string ensemble_kind_name(EnsembleKind k) {
    return k == EnsembleKind::regular ? "regular" : "erdos_renyi";
}

inline EnsembleKind parse_ensemble_kind(const std::string& s) {
    if (s == "regular" || s == "reg") return EnsembleKind::regular;
    if (s == "erdos_renyi" || s == "er") return EnsembleKind::erdos_renyi;
    throw std::invalid_argument("unknown ensemble '" + s + "' (expected regular or erdos_renyi)");
}

inline std::string ensemble_tag(const EnsembleSpec& e) {
    if (e.kind == EnsembleKind::regular) return "reg" + std::to_string(e.degree);
    return "er" + format_double(e.edge_prob);
}

inline std::string instance_id(const EnsembleSpec& e, int n, int occurrence) {
    return ensemble_tag(e) + "_n" + std::to_string(n) + "_i" + std::to_string(occurrence);
}

inline std::string termination_name(Termination t) {
    return t == Termination::converged ? "converged" : "eval_budget_exhausted";
}

inline void validate_experiment_config(const ExperimentConfig& c) {
    if (c.node_counts.empty())
        throw std::invalid_argument("config: node_counts must be non-empty");
    for (int n : c.node_counts)
        if (n < 2 || n > kMaxVertices)
            throw std::invalid_argument("config: node counts must be in [2, " +
                                        std::to_string(kMaxVertices) + "]");
    if (c.instances_per_n < 1) throw std::invalid_argument("config: instances_per_n must be >= 1");
    if (c.p_max < 1) throw std::invalid_argument("config: p_max must be >= 1");
    if (c.trials_per_depth < 1)
        throw std::invalid_argument("config: trials_per_depth must be >= 1");
    if (c.optimizer.max_evals <= 0 || c.optimizer.f_abs_tol <= 0.0 ||
        c.optimizer.x_abs_tol <= 0.0 || c.optimizer.initial_step <= 0.0)
        throw std::invalid_argument("config: optimizer options must be strictly positive");
    if (c.ensemble.kind == EnsembleKind::regular) {
        if (c.ensemble.degree < 1) throw std::invalid_argument("config: degree must be >= 1");
        for (int n : c.node_counts) {
            if (c.ensemble.degree >= n)
                throw std::invalid_argument("config: degree must be < every node count");
            if ((static_cast<long long>(n) * c.ensemble.degree) % 2 != 0)
                throw std::invalid_argument("config: n * degree must be even for every n");
        }
    } else {
        if (!(c.ensemble.edge_prob > 0.0 && c.ensemble.edge_prob <= 1.0))
            throw std::invalid_argument("config: edge_prob must be in (0, 1]");
    }
    if (c.workers < 0) throw std::invalid_argument("config: workers must be >= 0");
    if (c.out_dir.empty()) throw std::invalid_argument("config: out_dir must be non-empty");
}

namespace detail {

// Seed-stream tags: one stream per purpose so instance identity is a pure
// function of (master_seed, n, occurrence) and is untouched by how many
// strategies or depths a given run asks for.
inline constexpr std::uint64_t kInstanceStream = 1;
inline constexpr std::uint64_t kSweepStream = 2;

inline constexpr int kMaxEmptyGraphRetries = 100;

inline Graph make_instance_graph(const EnsembleSpec& e, int n, std::uint64_t seed,
                                 std::uint64_t& used_seed) {
    if (e.kind == EnsembleKind::regular) {
        used_seed = seed;
        return generate_regular(n, e.degree, seed);
    }
    for (int retry = 0; retry <= kMaxEmptyGraphRetries; ++retry) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(retry);
        Graph g = generate_erdos_renyi(n, e.edge_prob, s);
        if (!g.edges.empty()) {
            used_seed = s;
            return g;
        }
        std::cerr << "warning: empty graph (n=" << n << ", seed=" << s
                  << "), retrying with incremented seed\n";
    }
    throw std::runtime_error("make_instance_graph: retry budget exhausted on empty graphs");
}

inline std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

inline void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

} // namespace detail

// Per-trial rows for one strategy, ordered by (instance, depth, trial).
inline void write_trials_csv(const std::filesystem::path& path,
                             const std::vector<InstanceRun>& instances, bool pf) {
    std::ofstream out = detail::open_for_write(path);
    out << join_csv_row({"instance_id", "n", "depth", "trial", "seed", "alpha", "f_opt", "c_max",
                         "n_evals", "termination", "init_gammas", "init_betas", "opt_gammas",
                         "opt_betas"});
    for (const InstanceRun& inst : instances) {
        const auto& records = pf ? inst.pf_records : inst.random_records;
        for (const DepthRecord& record : records) {
            for (std::size_t t = 0; t < record.trials.size(); ++t) {
                const TrialResult& trial = record.trials[t];
                out << join_csv_row({inst.id, std::to_string(inst.n),
                                     std::to_string(record.depth), std::to_string(t),
                                     std::to_string(trial.seed), format_double(trial.alpha),
                                     format_double(trial.f_opt), std::to_string(inst.c_max),
                                     std::to_string(trial.n_evals),
                                     termination_name(trial.termination),
                                     join_doubles(trial.initial_params.gammas),
                                     join_doubles(trial.initial_params.betas),
                                     join_doubles(trial.optimal_params.gammas),
                                     join_doubles(trial.optimal_params.betas)});
            }
        }
    }
    detail::finish_write(out, path);
}

inline void write_aggregate_csv(const std::filesystem::path& path,
                                const std::vector<InstanceRun>& instances, bool pf) {
    std::ofstream out = detail::open_for_write(path);
    out << join_csv_row({"instance_id", "n", "depth", "n_trials", "mean_alpha", "std_alpha",
                         "best_alpha", "best_trial_index"});
    for (const InstanceRun& inst : instances) {
        const auto& records = pf ? inst.pf_records : inst.random_records;
        for (const DepthRecord& record : records) {
            out << join_csv_row({inst.id, std::to_string(inst.n), std::to_string(record.depth),
                                 std::to_string(record.all_alphas.size()),
                                 format_double(record.mean_alpha),
                                 format_double(record.std_alpha),
                                 format_double(record.best_trial.alpha),
                                 std::to_string(record.best_trial_index)});
        }
    }
    detail::finish_write(out, path);
}

// Pooled per (n, depth): statistics over the concatenated per-trial alphas
// of every instance with that node count.
inline void write_pooled_csv(const std::filesystem::path& path,
                             const std::vector<InstanceRun>& instances, bool pf) {
    std::map<std::pair<int, int>, std::vector<double>> pooled;
    for (const InstanceRun& inst : instances) {
        const auto& records = pf ? inst.pf_records : inst.random_records;
        for (const DepthRecord& record : records) {
            auto& bucket = pooled[{inst.n, record.depth}];
            bucket.insert(bucket.end(), record.all_alphas.begin(), record.all_alphas.end());
        }
    }
    std::ofstream out = detail::open_for_write(path);
    out << join_csv_row({"n", "depth", "n_trials", "mean_alpha", "std_alpha"});
    for (const auto& [key, alphas] : pooled) {
        out << join_csv_row({std::to_string(key.first), std::to_string(key.second),
                             std::to_string(alphas.size()), format_double(mean_of(alphas)),
                             format_double(population_std_of(alphas))});
    }
    detail::finish_write(out, path);
}

inline void write_drift_csv(const std::filesystem::path& path,
                            const std::vector<InstanceRun>& instances) {
    std::ofstream out = detail::open_for_write(path);
    out << join_csv_row({"instance_id", "kind", "index", "depth", "value"});
    for (const InstanceRun& inst : instances) {
        for (const DriftTrack& track : inst.pf_drift) {
            const std::string kind = track.kind == ParamKind::gamma ? "gamma" : "beta";
            for (const auto& [depth, value] : track.value_by_depth) {
                out << join_csv_row({inst.id, kind, std::to_string(track.index),
                                     std::to_string(depth), format_double(value)});
            }
        }
    }
    detail::finish_write(out, path);
}

inline std::string utc_timestamp() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
}

inline nlohmann::ordered_json config_to_json(const ExperimentConfig& c) {
    nlohmann::ordered_json ensemble;
    ensemble["kind"] = ensemble_kind_name(c.ensemble.kind);
    if (c.ensemble.kind == EnsembleKind::regular)
        ensemble["degree"] = c.ensemble.degree;
    else
        ensemble["edge_prob"] = c.ensemble.edge_prob;
    return nlohmann::ordered_json{
        {"ensemble", ensemble},
        {"node_counts", c.node_counts},
        {"instances_per_n", c.instances_per_n},
        {"p_max", c.p_max},
        {"trials_per_depth", c.trials_per_depth},
        {"strategy", strategy_name(c.strategy)},
        {"master_seed", c.master_seed},
        {"optimizer",
         {{"max_evals", c.optimizer.max_evals},
          {"f_abs_tol", c.optimizer.f_abs_tol},
          {"x_abs_tol", c.optimizer.x_abs_tol},
          {"initial_step", c.optimizer.initial_step}}},
        {"augment_zero_trial", c.augment_zero_trial},
        {"workers", c.workers},
        {"out_dir", c.out_dir},
    };
}

inline void write_manifest(const std::filesystem::path& path, const ExperimentReport& report) {
    nlohmann::ordered_json manifest;
    manifest["created_utc"] = utc_timestamp(); // the one field reruns are allowed to differ in
    manifest["config"] = config_to_json(report.config);
    manifest["files"] = report.files;
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    for (const InstanceRun& inst : report.instances) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (auto [j, k] : inst.graph.edges) edges.push_back({j, k});
        instances.push_back({
            {"id", inst.id},
            {"n", inst.n},
            {"occurrence", inst.occurrence},
            {"graph_seed", inst.graph_seed},
            {"sweep_seed", inst.sweep_seed},
            {"c_max", inst.c_max},
            {"max_cut_witness", inst.witness},
            {"edges", edges},
        });
    }
    manifest["instances"] = instances;
    std::ofstream out = detail::open_for_write(path);
    out << manifest.dump(2) << '\n';
    detail::finish_write(out, path);
}

// Generates the seeded instances, solves each exactly, runs the configured
// strategy sweeps, and writes the CSV/manifest outputs. Deterministic under
// master_seed except for the manifest timestamp.
inline ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate_experiment_config(config);

    ExperimentReport report;
    report.config = config;
    report.out_dir = config.out_dir;
    std::filesystem::create_directories(report.out_dir);

    SweepOptions sweep;
    sweep.trials_per_depth = config.trials_per_depth;
    sweep.optimizer = config.optimizer;
    sweep.augment_zero_trial = config.augment_zero_trial;
    sweep.n_workers = config.workers > 0 ? config.workers : resolve_worker_count();

    const bool run_random = config.strategy != StrategyChoice::parameters_fixing;
    const bool run_pf = config.strategy != StrategyChoice::random;

    std::map<int, int> occurrence_of;
    for (int n : config.node_counts) {
        for (int k = 0; k < config.instances_per_n; ++k) {
            InstanceRun inst;
            inst.n = n;
            inst.occurrence = occurrence_of[n]++;
            inst.id = instance_id(config.ensemble, n, inst.occurrence);
            const std::uint64_t base_seed =
                derive_seed(config.master_seed, detail::kInstanceStream,
                            static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(inst.occurrence));
            inst.graph = detail::make_instance_graph(config.ensemble, n, base_seed,
                                                     inst.graph_seed);
            const MaxCutSolution mc = max_cut_bruteforce(inst.graph);
            inst.c_max = mc.c_max;
            inst.witness = mc.witness;
            inst.sweep_seed = derive_seed(config.master_seed, detail::kSweepStream,
                                          static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(inst.occurrence));
            if (run_random)
                inst.random_records = random_init_sweep(inst.graph, inst.c_max, config.p_max,
                                                        inst.sweep_seed, sweep);
            if (run_pf) {
                inst.pf_records = parameters_fixing_sweep(inst.graph, inst.c_max, config.p_max,
                                                          inst.sweep_seed, sweep);
                inst.pf_drift = drift_tracks(inst.pf_records);
            }
            report.instances.push_back(std::move(inst));
        }
    }

    if (run_random) {
        write_trials_csv(report.out_dir / "trials_random.csv", report.instances, false);
        write_aggregate_csv(report.out_dir / "aggregate_random.csv", report.instances, false);
        write_pooled_csv(report.out_dir / "pooled_random.csv", report.instances, false);
        report.files.insert(report.files.end(),
                            {"trials_random.csv", "aggregate_random.csv", "pooled_random.csv"});
    }
    if (run_pf) {
        write_trials_csv(report.out_dir / "trials_pf.csv", report.instances, true);
        write_aggregate_csv(report.out_dir / "aggregate_pf.csv", report.instances, true);
        write_pooled_csv(report.out_dir / "pooled_pf.csv", report.instances, true);
        write_drift_csv(report.out_dir / "drift_pf.csv", report.instances);
        report.files.insert(report.files.end(), {"trials_pf.csv", "aggregate_pf.csv",
                                                 "pooled_pf.csv", "drift_pf.csv"});
    }
    write_manifest(report.out_dir / "manifest.json", report);
    return report;
}

struct AggregateRow {
    std::string instance_id;
    int n = 0;
    int depth = 0;
    int n_trials = 0;
    double mean_alpha = 0.0;
    double std_alpha = 0.0;
    double best_alpha = 0.0;
    int best_trial_index = 0;
};

inline std::vector<AggregateRow> load_aggregate_csv(const std::filesystem::path& path) {
    const auto rows = read_csv(path.string());
    const std::vector<std::string> expected = {"instance_id", "n",          "depth",
                                               "n_trials",    "mean_alpha", "std_alpha",
                                               "best_alpha",  "best_trial_index"};
    if (rows.empty() || rows.front() != expected)
        throw std::runtime_error("load_aggregate_csv: unexpected header in " + path.string());
    std::vector<AggregateRow> out;
    out.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != expected.size())
            throw std::runtime_error("load_aggregate_csv: malformed row in " + path.string());
        out.push_back({r[0], std::stoi(r[1]), std::stoi(r[2]), std::stoi(r[3]), parse_double(r[4]),
                       parse_double(r[5]), parse_double(r[6]), std::stoi(r[7])});
    }
    return out;
}

struct ComparisonRow {
    std::string instance_id;
    int n = 0;
    int depth = 0;
    double mean_alpha_a = 0.0;
    double mean_alpha_b = 0.0;
    double delta = 0.0; // b - a
};

struct ComparisonSummary {
    std::vector<ComparisonRow> rows;
    int b_wins = 0;
    int a_wins = 0;
    int ties = 0;
};

// Row-by-row delta of two aggregate tables covering the same (instance,
// depth) grid. Row order follows table a.
inline ComparisonSummary compare_aggregates(const std::vector<AggregateRow>& a,
                                            const std::vector<AggregateRow>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_aggregates: reports cover different row counts");
    std::map<std::pair<std::string, int>, const AggregateRow*> b_index;
    for (const AggregateRow& row : b) b_index[{row.instance_id, row.depth}] = &row;
    if (b_index.size() != b.size())
        throw std::invalid_argument("compare_aggregates: duplicate (instance, depth) rows");

    ComparisonSummary summary;
    summary.rows.reserve(a.size());
    for (const AggregateRow& ra : a) {
        const auto it = b_index.find({ra.instance_id, ra.depth});
        if (it == b_index.end() || it->second->n != ra.n)
            throw std::invalid_argument("compare_aggregates: coverage mismatch at " +
                                        ra.instance_id + " depth " + std::to_string(ra.depth));
        const AggregateRow& rb = *it->second;
        const double delta = rb.mean_alpha - ra.mean_alpha;
        summary.rows.push_back({ra.instance_id, ra.n, ra.depth, ra.mean_alpha, rb.mean_alpha,
                                delta});
        if (delta > 0.0)
            ++summary.b_wins;
        else if (delta < 0.0)
            ++summary.a_wins;
        else
            ++summary.ties;
    }
    return summary;
}

inline void write_comparison_csv(std::ostream& out, const ComparisonSummary& summary) {
    out << join_csv_row({"instance_id", "n", "depth", "mean_alpha_a", "mean_alpha_b", "delta"});
    for (const ComparisonRow& row : summary.rows) {
        out << join_csv_row({row.instance_id, std::to_string(row.n), std::to_string(row.depth),
                             format_double(row.mean_alpha_a), format_double(row.mean_alpha_b),
                             format_double(row.delta)});
    }
}

// F_p over the (gamma_p, beta_p) lattice with the first p-1 layers frozen.
// Lattice points are gamma = 2*pi*k/r and beta = pi*k/r for k = 0..r-1, so
// the grid tiles the canonical domains without duplicating the wrap-around
// column.
struct LandscapeGrid {
    std::string graph_id;
    int depth = 1;
    ParameterVector prefix;
    int resolution = 0;
    std::vector<double> values; // row-major, values[gamma_idx * resolution + beta_idx]

    double at(int gamma_idx, int beta_idx) const {
        return values[static_cast<std::size_t>(gamma_idx) * resolution +
                      static_cast<std::size_t>(beta_idx)];
    }
    double mean() const { return mean_of(values); }
};

inline LandscapeGrid landscape_grid(const Graph& g, const ParameterVector& prefix,
                                    int resolution) {
    if (resolution < 2) throw std::invalid_argument("landscape_grid: resolution must be >= 2");
    if (prefix.gammas.size() != prefix.betas.size())
        throw std::invalid_argument("landscape_grid: prefix gamma/beta length mismatch");

    LandscapeGrid grid;
    grid.depth = prefix.depth() + 1;
    grid.prefix = prefix;
    grid.resolution = resolution;
    grid.values.resize(static_cast<std::size_t>(resolution) * resolution);

    QaoaObjective objective(g);
    ParameterVector params = prefix;
    params.gammas.push_back(0.0);
    params.betas.push_back(0.0);
    std::vector<double> flat = params.to_flat();
    const std::size_t p = params.gammas.size();
    for (int gi = 0; gi < resolution; ++gi) {
        flat[p - 1] = 2.0 * std::numbers::pi * gi / resolution;
        for (int bi = 0; bi < resolution; ++bi) {
            flat[2 * p - 1] = std::numbers::pi * bi / resolution;
            grid.values[static_cast<std::size_t>(gi) * resolution + bi] =
                objective.value_flat(flat);
        }
    }
    return grid;
}

// Header row carries the beta lattice; each body row is one gamma value
// followed by the F_p cells at that gamma.
inline void write_landscape_csv(std::ostream& out, const LandscapeGrid& grid) {
    std::vector<std::string> header;
    header.reserve(static_cast<std::size_t>(grid.resolution) + 1);
    header.emplace_back("gamma");
    for (int bi = 0; bi < grid.resolution; ++bi)
        header.push_back(format_double(std::numbers::pi * bi / grid.resolution));
    out << join_csv_row(header);
    for (int gi = 0; gi < grid.resolution; ++gi) {
        std::vector<std::string> row;
        row.reserve(static_cast<std::size_t>(grid.resolution) + 1);
        row.push_back(format_double(2.0 * std::numbers::pi * gi / grid.resolution));
        for (int bi = 0; bi < grid.resolution; ++bi) row.push_back(format_double(grid.at(gi, bi)));
        out << join_csv_row(row);
    }
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool parse_bool(const std::string& s, const std::string& key) {
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw std::invalid_argument("config: cannot parse boolean for key '" + key + "'");
}

inline int parse_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: cannot parse integer for key '" + key + "'");
    }
}

inline std::uint64_t parse_u64(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: cannot parse integer for key '" + key + "'");
    }
}

inline double parse_real(const std::string& s, const std::string& key) {
    try {
        return parse_double(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: cannot parse number for key '" + key + "'");
    }
}

} // namespace detail

// Line-oriented "key = value" file; '#' starts a comment, blank lines are
// skipped, unknown keys are rejected. The full key list mirrors
// ExperimentConfig and is documented in the README.
inline ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_config_file: cannot open " + path.string());

    ExperimentConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected 'key = value' at line " +
                                        std::to_string(lineno));
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));

        if (key == "ensemble") {
            config.ensemble.kind = parse_ensemble_kind(value);
        } else if (key == "degree") {
            config.ensemble.degree = detail::parse_int(value, key);
        } else if (key == "edge_prob") {
            config.ensemble.edge_prob = detail::parse_real(value, key);
        } else if (key == "node_counts") {
            config.node_counts.clear();
            std::stringstream ss(value);
            std::string cell;
            while (std::getline(ss, cell, ','))
                config.node_counts.push_back(detail::parse_int(detail::trim(cell), key));
        } else if (key == "instances_per_n") {
            config.instances_per_n = detail::parse_int(value, key);
        } else if (key == "p_max") {
            config.p_max = detail::parse_int(value, key);
        } else if (key == "trials_per_depth") {
            config.trials_per_depth = detail::parse_int(value, key);
        } else if (key == "strategy") {
            config.strategy = parse_strategy(value);
        } else if (key == "master_seed") {
            config.master_seed = detail::parse_u64(value, key);
        } else if (key == "max_evals") {
            config.optimizer.max_evals = detail::parse_int(value, key);
        } else if (key == "f_abs_tol") {
            config.optimizer.f_abs_tol = detail::parse_real(value, key);
        } else if (key == "x_abs_tol") {
            config.optimizer.x_abs_tol = detail::parse_real(value, key);
        } else if (key == "initial_step") {
            config.optimizer.initial_step = detail::parse_real(value, key);
        } else if (key == "augment_zero_trial") {
            config.augment_zero_trial = detail::parse_bool(value, key);
        } else if (key == "workers") {
            config.workers = detail::parse_int(value, key);
        } else if (key == "out_dir") {
            config.out_dir = value;
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "' at line " +
                                        std::to_string(lineno));
        }
    }
    return config;
}

} // namespace qaoalab

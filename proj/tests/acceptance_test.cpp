// End-to-end acceptance gate. Each test prints one "[ACCEPT] Cn PASS/FAIL"
// line; C8 is advisory and prints WARN instead of failing.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qaoalab/qaoalab.hpp"
#include "support/dense_oracle.hpp"

using namespace qaoalab;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kAcceptSeed = 1001;

fs::path accept_root() {
    static const fs::path root = [] {
        const fs::path p = fs::temp_directory_path() / "qaoalab_acceptance";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return root;
}

void report(const std::string& id, bool ok, const std::string& detail) {
    std::cout << "[ACCEPT] " << id << ' ' << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << ' ' << detail;
    std::cout << std::endl;
    EXPECT_TRUE(ok) << id << ": " << detail;
}

ParameterVector random_params(SplitMix64& rng, int p) {
    ParameterVector v;
    for (int i = 0; i < p; ++i) v.gammas.push_back(rng.uniform(0.0, 2.0 * kPi));
    for (int i = 0; i < p; ++i) v.betas.push_back(rng.uniform(0.0, kPi));
    return v;
}

// Scaled-down reproduction run: three 3-regular instances (two with n=6,
// one with n=8), layer-by-layer strategy to depth 8.
ExperimentConfig trend_config(const std::string& out_name) {
    ExperimentConfig config;
    config.ensemble.kind = EnsembleKind::regular;
    config.ensemble.degree = 3;
    config.node_counts = {6, 6, 8};
    config.instances_per_n = 1;
    config.p_max = 8;
    config.trials_per_depth = 20;
    config.strategy = StrategyChoice::parameters_fixing;
    config.master_seed = kAcceptSeed;
    config.out_dir = (accept_root() / out_name).string();
    return config;
}

// Head-to-head run on the same n=8 instance (same master seed and
// occurrence, hence the same graph), both strategies to depth 10.
ExperimentConfig head_to_head_config() {
    ExperimentConfig config;
    config.ensemble.kind = EnsembleKind::regular;
    config.ensemble.degree = 3;
    config.node_counts = {8};
    config.instances_per_n = 1;
    config.p_max = 10;
    config.trials_per_depth = 20;
    config.strategy = StrategyChoice::both;
    config.master_seed = kAcceptSeed;
    config.out_dir = (accept_root() / "head_to_head").string();
    return config;
}

const ExperimentReport& trend_report() {
    static const ExperimentReport report = run_experiment(trend_config("trend_run1"));
    return report;
}

const ExperimentReport& head_to_head_report() {
    static const ExperimentReport report = run_experiment(head_to_head_config());
    return report;
}

double pooled_mean_at_depth(const ExperimentReport& report, int depth) {
    std::vector<double> alphas;
    for (const InstanceRun& inst : report.instances) {
        const DepthRecord& record = inst.pf_records[static_cast<std::size_t>(depth - 1)];
        alphas.insert(alphas.end(), record.all_alphas.begin(), record.all_alphas.end());
    }
    return mean_of(alphas);
}

std::vector<double> average_ranks(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&xs](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

// Spearman rank correlation of xs against its own index order.
double spearman_against_index(const std::vector<double>& xs) {
    std::vector<double> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 1.0);
    const std::vector<double> rx = average_ranks(xs);
    const double mx = mean_of(rx);
    const double mi = mean_of(idx);
    double cov = 0.0, vx = 0.0, vi = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        cov += (rx[k] - mx) * (idx[k] - mi);
        vx += (rx[k] - mx) * (rx[k] - mx);
        vi += (idx[k] - mi) * (idx[k] - mi);
    }
    return cov / std::sqrt(vx * vi);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Acceptance, C1_ZeroAngleBaseline) {
    double worst = 0.0;
    int count = 0;
    const ParameterVector zeros{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    const int regular_n[4] = {6, 8, 10, 12};
    for (int i = 0; i < 25; ++i) {
        const Graph g = generate_regular(regular_n[i % 4], 3, 200 + static_cast<std::uint64_t>(i));
        worst = std::max(worst, std::abs(fp(g, zeros) - g.edge_count() / 2.0));
        ++count;
    }
    for (int i = 0; i < 25; ++i) {
        const Graph g =
            generate_erdos_renyi(5 + i % 6, 0.5, 300 + static_cast<std::uint64_t>(i));
        worst = std::max(worst, std::abs(fp(g, zeros) - g.edge_count() / 2.0));
        ++count;
    }
    report("C1", count == 50 && worst < 1e-12,
           "graphs=" + std::to_string(count) + " worst_abs_err=" + format_double(worst));
}

TEST(Acceptance, C2_DenseOracleEquivalence) {
    SplitMix64 rng(4242);
    double worst = 0.0;
    int graphs = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
        for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
            Graph g{n, {}};
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1ULL) g.edges.push_back(pairs[e]);
            ++graphs;
            for (int p = 1; p <= 3; ++p) {
                for (int draw = 0; draw < 10; ++draw) {
                    const ParameterVector v = random_params(rng, p);
                    const StateVector ours = evolve(g, v);
                    const Eigen::VectorXcd ref = dense_oracle::evolve(g, v);
                    for (int z = 0; z < ref.size(); ++z)
                        worst = std::max(worst,
                                         std::abs(std::norm(ours.amplitudes[z]) - std::norm(ref[z])));
                }
            }
        }
    }
    report("C2", graphs == 75 && worst < 1e-10,
           "graphs=" + std::to_string(graphs) + " worst_prob_err=" + format_double(worst));
}

TEST(Acceptance, C3_SingleEdgeClosedForm) {
    const Graph edge{2, {{0, 1}}};
    const CutSpectrum spectrum = cut_spectrum(edge);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            const double gamma = 2.0 * kPi * i / 64.0;
            const double beta = kPi * j / 64.0;
            const double got = expectation(evolve(spectrum, {{gamma}, {beta}}), spectrum);
            const double expected = 0.5 * (1.0 + std::sin(gamma) * std::sin(4.0 * beta));
            worst = std::max(worst, std::abs(got - expected));
        }
    }
    report("C3", worst < 1e-10, "grid=64x64 worst_abs_err=" + format_double(worst));
}

TEST(Acceptance, C4_PeriodicityAndConjugation) {
    const Graph g = generate_regular(6, 3, 77);
    SplitMix64 rng(555);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const ParameterVector v = random_params(rng, 3);
        const double base = fp(g, v);
        for (int i = 0; i < 3; ++i) {
            ParameterVector sg = v;
            sg.gammas[static_cast<std::size_t>(i)] += 2.0 * kPi;
            worst = std::max(worst, std::abs(fp(g, sg) - base));
            ParameterVector sb = v;
            sb.betas[static_cast<std::size_t>(i)] += kPi;
            worst = std::max(worst, std::abs(fp(g, sb) - base));
        }
        ParameterVector neg = v;
        for (double& x : neg.gammas) x = -x;
        for (double& x : neg.betas) x = -x;
        worst = std::max(worst, std::abs(fp(g, neg) - base));
    }
    report("C4", worst < 1e-10, "draws=20 worst_abs_err=" + format_double(worst));
}

TEST(Acceptance, C5_DepthOneRegularQuality) {
    const std::pair<int, std::uint64_t> instances[5] = {
        {6, 101}, {6, 102}, {6, 103}, {8, 104}, {8, 105}};
    double lowest_best = 1.0;
    for (const auto& [n, seed] : instances) {
        const Graph g = generate_regular(n, 3, seed);
        const int c_max = max_cut_bruteforce(g).c_max;
        const auto records = random_init_sweep(g, c_max, 1, derive_seed(kAcceptSeed, seed));
        lowest_best = std::min(lowest_best, records[0].best_trial.alpha);
    }
    report("C5", lowest_best >= 0.6924,
           "instances=5 lowest_best_alpha=" + format_double(lowest_best));
}

TEST(Acceptance, C6_LayerwiseTrend) {
    const ExperimentReport& rep = trend_report();
    double worst_drop = 0.0;
    for (const InstanceRun& inst : rep.instances) {
        for (std::size_t q = 1; q < inst.pf_records.size(); ++q) {
            const double drop = inst.pf_records[q - 1].best_trial.alpha -
                                inst.pf_records[q].best_trial.alpha;
            worst_drop = std::max(worst_drop, drop);
        }
    }
    const double mean_p7 = pooled_mean_at_depth(rep, 7);
    const double mean_p8 = pooled_mean_at_depth(rep, 8);
    const bool monotone = worst_drop <= 1e-3;
    const bool high_mean = mean_p7 >= 0.93 && mean_p8 >= 0.93;
    std::string detail = "worst_best_alpha_drop=" + format_double(worst_drop) +
                         " pooled_mean_p7=" + format_double(mean_p7) +
                         " pooled_mean_p8=" + format_double(mean_p8);
    if (high_mean && (mean_p7 < 0.95 || mean_p8 < 0.95))
        detail += " (note: mean in the 0.93-0.95 acceptance band)";
    report("C6", monotone && high_mean, detail);
}

TEST(Acceptance, C7_StrategyComparison) {
    const ExperimentReport& rep = head_to_head_report();
    const InstanceRun& inst = rep.instances.at(0);
    const double random_mean = inst.random_records.at(9).mean_alpha;
    const double pf_mean = inst.pf_records.at(9).mean_alpha;
    report("C7", pf_mean >= random_mean,
           "n=8 p=10 pf_mean=" + format_double(pf_mean) +
               " random_mean=" + format_double(random_mean));
}

TEST(Acceptance, C8_StdDevTrendSoft) {
    const ExperimentReport& rep = head_to_head_report();
    const InstanceRun& inst = rep.instances.at(0);
    std::vector<double> stds;
    for (int p = 2; p <= 8; ++p)
        stds.push_back(inst.pf_records[static_cast<std::size_t>(p - 1)].std_alpha);
    const double rho = spearman_against_index(stds);
    const bool negative = rho < 0.0;
    std::cout << "[ACCEPT] C8 " << (negative ? "PASS" : "WARN (soft criterion, not failing)")
              << " spearman_depth_vs_std=" << format_double(rho) << std::endl;
    SUCCEED();
}

TEST(Acceptance, C9_LandscapePrefixEffect) {
    const Graph& g = head_to_head_report().instances.at(0).graph;
    QaoaObjective objective(g);
    const Objective f = [&objective](std::span<const double> x) {
        return objective.value_flat(x);
    };

    // best and worst depth-1 stationary points from the same 20 starts
    std::vector<double> best_x, worst_x;
    double best_f = -1.0, worst_f = 1e300;
    for (int t = 0; t < 20; ++t) {
        SplitMix64 rng(derive_seed(kAcceptSeed, 9, static_cast<std::uint64_t>(t)));
        const std::vector<double> x0 = {rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, kPi)};
        const OptimizationResult up = maximize(f, x0);
        if (up.f_opt > best_f) {
            best_f = up.f_opt;
            best_x = up.x_opt;
        }
        const OptimizationResult down = minimize(f, x0);
        if (down.f_opt < worst_f) {
            worst_f = down.f_opt;
            worst_x = down.x_opt;
        }
    }
    const LandscapeGrid max_grid =
        landscape_grid(g, ParameterVector::from_flat(best_x), 32);
    const LandscapeGrid min_grid =
        landscape_grid(g, ParameterVector::from_flat(worst_x), 32);
    report("C9", max_grid.mean() > min_grid.mean(),
           "mean_with_maximizer_prefix=" + format_double(max_grid.mean()) +
               " mean_with_minimizer_prefix=" + format_double(min_grid.mean()));
}

TEST(Acceptance, C10_Determinism) {
    const ExperimentReport& first = trend_report();
    const ExperimentReport second = run_experiment(trend_config("trend_run2"));
    const std::string a = slurp(first.out_dir / "trials_pf.csv");
    const std::string b = slurp(second.out_dir / "trials_pf.csv");
    const bool same = !a.empty() && a == b;
    EXPECT_EQ(slurp(first.out_dir / "aggregate_pf.csv"), slurp(second.out_dir / "aggregate_pf.csv"));
    EXPECT_EQ(slurp(first.out_dir / "drift_pf.csv"), slurp(second.out_dir / "drift_pf.csv"));
    report("C10", same, "trials_pf.csv bytes=" + std::to_string(a.size()) +
                            (same ? " identical across reruns" : " DIFFER across reruns"));
}

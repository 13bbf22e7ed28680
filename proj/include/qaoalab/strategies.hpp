#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qaoalab/graph.hpp"
#include "qaoalab/nelder_mead.hpp"
#include "qaoalab/parallel.hpp"
#include "qaoalab/rng.hpp"
#include "qaoalab/simulator.hpp"

namespace qaoalab {

// One optimization run from one starting point. optimal_params keeps the raw
// optimizer output (no angle reduction) so f_opt is bit-exactly re-checkable
// and so a later depth can reuse it as a prefix without perturbation.
struct TrialResult {
    int depth = 0;
    std::uint64_t seed = 0;
    ParameterVector initial_params;
    ParameterVector optimal_params;
    double f_opt = 0.0;
    double alpha = 0.0;
    int n_evals = 0;
    Termination termination = Termination::eval_budget_exhausted;
};

struct DepthRecord {
    int depth = 0;
    int best_trial_index = 0;
    TrialResult best_trial;
    std::vector<TrialResult> trials; // in trial-index order; all_alphas[i] = trials[i].alpha
    std::vector<double> all_alphas;
    double mean_alpha = 0.0;
    double std_alpha = 0.0;
};

struct SweepOptions {
    int trials_per_depth = 20;
    OptimizerOptions optimizer{};
    // Adds one trial seeded at (gamma_q, beta_q) = (0, 0) on top of the
    // best previous-depth parameters for every depth q >= 2. Zero angles
    // are exact identity layers, so that trial starts at the previous
    // best objective and the per-depth best can never regress.
    bool augment_zero_trial = true;
    int n_workers = 1;
};

inline double mean_of(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean_of: empty input");
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc / static_cast<double>(xs.size());
}

inline double population_std_of(std::span<const double> xs) {
    const double m = mean_of(xs);
    double acc = 0.0;
    for (double x : xs) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

namespace detail {

inline TrialResult run_trial(const CutSpectrum& spectrum, int c_max, ParameterVector init,
                             std::uint64_t seed, const OptimizerOptions& options) {
    if (c_max <= 0) throw std::invalid_argument("run_trial: c_max must be positive");
    QaoaObjective objective(spectrum);
    const Objective f = [&objective](std::span<const double> x) {
        return objective.value_flat(x);
    };
    const OptimizationResult opt = maximize(f, init.to_flat(), options);

    TrialResult trial;
    trial.depth = init.depth();
    trial.seed = seed;
    trial.initial_params = std::move(init);
    trial.optimal_params = ParameterVector::from_flat(opt.x_opt);
    trial.f_opt = opt.f_opt;
    trial.alpha = opt.f_opt / static_cast<double>(c_max);
    trial.n_evals = opt.n_evals;
    trial.termination = opt.termination;
    return trial;
}

inline ParameterVector draw_random_params(SplitMix64& rng, int p) {
    ParameterVector v;
    v.gammas.reserve(p);
    v.betas.reserve(p);
    for (int i = 0; i < p; ++i) v.gammas.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
    for (int i = 0; i < p; ++i) v.betas.push_back(rng.uniform(0.0, std::numbers::pi));
    return v;
}

inline DepthRecord aggregate_depth(int depth, std::vector<TrialResult> trials) {
    if (trials.empty()) throw std::invalid_argument("aggregate_depth: no trials");
    DepthRecord record;
    record.depth = depth;
    record.trials = std::move(trials);
    record.all_alphas.reserve(record.trials.size());
    for (const TrialResult& t : record.trials) record.all_alphas.push_back(t.alpha);
    record.best_trial_index = 0; // ties keep the lowest trial index
    for (std::size_t i = 1; i < record.trials.size(); ++i)
        if (record.trials[i].alpha > record.trials[static_cast<std::size_t>(record.best_trial_index)].alpha)
            record.best_trial_index = static_cast<int>(i);
    record.best_trial = record.trials[static_cast<std::size_t>(record.best_trial_index)];
    record.mean_alpha = mean_of(record.all_alphas);
    record.std_alpha = population_std_of(record.all_alphas);
    return record;
}

} // namespace detail

// Baseline protocol: every angle drawn fresh, gamma_i uniform on [0, 2pi)
// and beta_i uniform on [0, pi), then all 2p parameters optimized.
inline TrialResult random_trial(const Graph& g, int c_max, int p, std::uint64_t seed,
                                const OptimizerOptions& options = {}) {
    if (p < 1) throw std::invalid_argument("random_trial: p must be >= 1");
    SplitMix64 rng(seed);
    return detail::run_trial(cut_spectrum(g), c_max, detail::draw_random_params(rng, p), seed,
                             options);
}

// Child seeds are derived per (depth, trial) from the master seed, so trial
// results do not depend on scheduling and so depth-1 trials coincide with
// the parameters-fixing sweep's depth-1 trials under the same master seed.
inline std::vector<DepthRecord> random_init_sweep(const Graph& g, int c_max, int p_max,
                                                  std::uint64_t master_seed,
                                                  const SweepOptions& options = {}) {
    if (p_max < 1) throw std::invalid_argument("random_init_sweep: p_max must be >= 1");
    if (options.trials_per_depth < 1)
        throw std::invalid_argument("random_init_sweep: trials_per_depth must be >= 1");
    const CutSpectrum spectrum = cut_spectrum(g);

    std::vector<DepthRecord> records;
    records.reserve(p_max);
    for (int p = 1; p <= p_max; ++p) {
        std::vector<TrialResult> trials(options.trials_per_depth);
        run_indexed(trials.size(), options.n_workers, [&](std::size_t i) {
            const std::uint64_t child =
                derive_seed(master_seed, static_cast<std::uint64_t>(p), i);
            SplitMix64 rng(child);
            trials[i] = detail::run_trial(spectrum, c_max, detail::draw_random_params(rng, p),
                                          child, options.optimizer);
        });
        records.push_back(detail::aggregate_depth(p, std::move(trials)));
    }
    return records;
}

// Layer-by-layer protocol: at depth q every trial starts from the best
// depth-(q-1) optimal parameters plus one fresh random (gamma_q, beta_q)
// pair, and all 2q parameters stay free during optimization. The best
// trial's optimal parameters become the prefix for depth q+1.
inline std::vector<DepthRecord> parameters_fixing_sweep(const Graph& g, int c_max, int p_max,
                                                        std::uint64_t master_seed,
                                                        const SweepOptions& options = {}) {
    if (p_max < 1) throw std::invalid_argument("parameters_fixing_sweep: p_max must be >= 1");
    if (options.trials_per_depth < 1)
        throw std::invalid_argument("parameters_fixing_sweep: trials_per_depth must be >= 1");
    const CutSpectrum spectrum = cut_spectrum(g);

    std::vector<DepthRecord> records;
    records.reserve(p_max);
    ParameterVector prefix;
    for (int q = 1; q <= p_max; ++q) {
        const bool with_zero_trial = options.augment_zero_trial && q >= 2;
        const std::size_t n_trials =
            static_cast<std::size_t>(options.trials_per_depth) + (with_zero_trial ? 1 : 0);
        std::vector<TrialResult> trials(n_trials);
        run_indexed(n_trials, options.n_workers, [&](std::size_t i) {
            const std::uint64_t child =
                derive_seed(master_seed, static_cast<std::uint64_t>(q), i);
            ParameterVector init = prefix;
            if (with_zero_trial && i == static_cast<std::size_t>(options.trials_per_depth)) {
                init.gammas.push_back(0.0);
                init.betas.push_back(0.0);
            } else {
                SplitMix64 rng(child);
                init.gammas.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
                init.betas.push_back(rng.uniform(0.0, std::numbers::pi));
            }
            trials[i] = detail::run_trial(spectrum, c_max, std::move(init), child,
                                          options.optimizer);
        });
        records.push_back(detail::aggregate_depth(q, std::move(trials)));
        prefix = records.back().best_trial.optimal_params;
    }
    return records;
}

enum class ParamKind { gamma, beta };

// One parameter position followed across depths: how the best trial's i-th
// gamma or beta moves as the sweep deepens. Values are reduced to the
// canonical domains so depths are comparable.
struct DriftTrack {
    int index = 0; // 1-based layer position
    ParamKind kind = ParamKind::gamma;
    std::map<int, double> value_by_depth;
};

inline std::vector<DriftTrack> drift_tracks(const std::vector<DepthRecord>& records) {
    int max_depth = 0;
    for (const DepthRecord& r : records) max_depth = std::max(max_depth, r.depth);

    std::vector<DriftTrack> tracks;
    tracks.reserve(2 * static_cast<std::size_t>(max_depth));
    for (int i = 1; i <= max_depth; ++i) {
        DriftTrack gamma_track{i, ParamKind::gamma, {}};
        DriftTrack beta_track{i, ParamKind::beta, {}};
        for (const DepthRecord& r : records) {
            if (r.depth < i) continue;
            const ParameterVector canon = r.best_trial.optimal_params.canonical();
            gamma_track.value_by_depth[r.depth] = canon.gammas[static_cast<std::size_t>(i - 1)];
            beta_track.value_by_depth[r.depth] = canon.betas[static_cast<std::size_t>(i - 1)];
        }
        tracks.push_back(std::move(gamma_track));
        tracks.push_back(std::move(beta_track));
    }
    return tracks;
}

} // namespace qaoalab

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qaoalab {

struct OptimizerOptions {
    int max_evals = 1000;
    double f_abs_tol = 1e-4;
    double x_abs_tol = 1e-4;
    double initial_step = 0.05;
};

enum class Termination { converged, eval_budget_exhausted };

struct OptimizationResult {
    std::vector<double> x_opt;
    double f_opt = 0.0;
    int n_evals = 0;
    Termination termination = Termination::eval_budget_exhausted;
};

using Objective = std::function<double(std::span<const double>)>;

namespace detail {

// Counts evaluations against the budget and remembers the best point seen,
// so the result is the running minimum even when the budget cuts an
// iteration short.
class BudgetedObjective {
public:
    BudgetedObjective(const Objective& f, int max_evals) : f_(f), max_evals_(max_evals) {}

    std::optional<double> try_eval(const std::vector<double>& x) {
        if (n_evals_ >= max_evals_) return std::nullopt;
        ++n_evals_;
        const double v = f_(std::span<const double>(x));
        if (!std::isfinite(v))
            throw std::runtime_error("nelder_mead: objective returned a non-finite value");
        if (v < best_f_) {
            best_f_ = v;
            best_x_ = x;
        }
        return v;
    }

    int n_evals() const { return n_evals_; }
    double best_f() const { return best_f_; }
    const std::vector<double>& best_x() const { return best_x_; }

private:
    const Objective& f_;
    int max_evals_;
    int n_evals_ = 0;
    double best_f_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

} // namespace detail

// Standard Nelder-Mead simplex descent: reflection 1, expansion 2,
// contraction 0.5, shrink 0.5. The initial simplex is x0 plus one point
// offset by initial_step along each coordinate. Terminates when both the
// objective spread and the per-coordinate spread of the simplex fall below
// their tolerances, or when the evaluation budget runs out. Deterministic.
inline OptimizationResult minimize(const Objective& objective, const std::vector<double>& x0,
                                   const OptimizerOptions& options = {}) {
    if (x0.empty()) throw std::invalid_argument("minimize: x0 must have at least one coordinate");
    if (options.max_evals <= 0 || options.f_abs_tol <= 0.0 || options.x_abs_tol <= 0.0 ||
        options.initial_step <= 0.0)
        throw std::invalid_argument("minimize: all optimizer options must be strictly positive");

    constexpr double rho = 1.0;   // reflection
    constexpr double chi = 2.0;   // expansion
    constexpr double psi = 0.5;   // contraction
    constexpr double sigma = 0.5; // shrink

    const std::size_t d = x0.size();
    detail::BudgetedObjective eval(objective, options.max_evals);

    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(d + 1);

    bool budget_hit = false;
    bool converged = false;

    for (std::size_t i = 0; i <= d && !budget_hit; ++i) {
        std::vector<double> x = x0;
        if (i > 0) x[i - 1] += options.initial_step;
        if (auto f = eval.try_eval(x))
            simplex.push_back({std::move(x), *f});
        else
            budget_hit = true;
    }

    while (!budget_hit) {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        Vertex& worst = simplex.back();
        const Vertex& best = simplex.front();
        const double second_worst_f = simplex[d - 1].f;

        if (worst.f == best.f) { // collapsed simplex, e.g. a constant objective
            converged = true;
            break;
        }
        double x_spread = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            double lo = simplex[0].x[j];
            double hi = lo;
            for (std::size_t i = 1; i <= d; ++i) {
                lo = std::min(lo, simplex[i].x[j]);
                hi = std::max(hi, simplex[i].x[j]);
            }
            x_spread = std::max(x_spread, hi - lo);
        }
        if (worst.f - best.f < options.f_abs_tol && x_spread < options.x_abs_tol) {
            converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i].x[j];
        for (double& c : centroid) c /= static_cast<double>(d);

        std::vector<double> xr(d);
        for (std::size_t j = 0; j < d; ++j) xr[j] = centroid[j] + rho * (centroid[j] - worst.x[j]);
        const auto fr = eval.try_eval(xr);
        if (!fr) {
            budget_hit = true;
            break;
        }

        if (*fr < best.f) {
            std::vector<double> xe(d);
            for (std::size_t j = 0; j < d; ++j)
                xe[j] = centroid[j] + chi * (centroid[j] - worst.x[j]);
            const auto fe = eval.try_eval(xe);
            if (fe && *fe < *fr)
                worst = {std::move(xe), *fe};
            else
                worst = {std::move(xr), *fr};
            if (!fe) budget_hit = true;
        } else if (*fr < second_worst_f) {
            worst = {std::move(xr), *fr};
        } else {
            bool shrink = false;
            if (*fr < worst.f) {
                std::vector<double> xc(d);
                for (std::size_t j = 0; j < d; ++j) xc[j] = centroid[j] + psi * (xr[j] - centroid[j]);
                const auto fc = eval.try_eval(xc);
                if (!fc) {
                    worst = {std::move(xr), *fr};
                    budget_hit = true;
                } else if (*fc <= *fr) {
                    worst = {std::move(xc), *fc};
                } else {
                    shrink = true;
                }
            } else {
                std::vector<double> xc(d);
                for (std::size_t j = 0; j < d; ++j)
                    xc[j] = centroid[j] - psi * (centroid[j] - worst.x[j]);
                const auto fc = eval.try_eval(xc);
                if (!fc) {
                    budget_hit = true;
                } else if (*fc < worst.f) {
                    worst = {std::move(xc), *fc};
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t i = 1; i <= d && !budget_hit; ++i) {
                    for (std::size_t j = 0; j < d; ++j)
                        simplex[i].x[j] =
                            simplex[0].x[j] + sigma * (simplex[i].x[j] - simplex[0].x[j]);
                    if (auto f = eval.try_eval(simplex[i].x))
                        simplex[i].f = *f;
                    else
                        budget_hit = true;
                }
            }
        }
    }

    OptimizationResult result;
    result.x_opt = eval.best_x();
    result.f_opt = eval.best_f();
    result.n_evals = eval.n_evals();
    result.termination = converged ? Termination::converged : Termination::eval_budget_exhausted;
    return result;
}

// Maximization via descent on the negated objective; f_opt is reported in
// the caller's sign convention.
inline OptimizationResult maximize(const Objective& objective, const std::vector<double>& x0,
                                   const OptimizerOptions& options = {}) {
    const Objective negated = [&objective](std::span<const double> x) { return -objective(x); };
    OptimizationResult result = minimize(negated, x0, options);
    result.f_opt = -result.f_opt;
    return result;
}

} // namespace qaoalab

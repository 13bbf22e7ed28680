#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qaoalab/graph.hpp"

namespace qaoalab {

// Reduce to [0, period).
inline double canonical_angle(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0; // fmod rounding at the boundary
    return r;
}

// The 2p variational angles, gammas for the cost layers and betas for the
// mixer layers. Flat layout is (gamma_1..gamma_p, beta_1..beta_p).
struct ParameterVector {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }

    static ParameterVector from_flat(std::span<const double> flat) {
        if (flat.size() % 2 != 0)
            throw std::invalid_argument("ParameterVector: flat size must be even");
        const std::size_t p = flat.size() / 2;
        ParameterVector v;
        v.gammas.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p));
        v.betas.assign(flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end());
        return v;
    }

    std::vector<double> to_flat() const {
        if (gammas.size() != betas.size())
            throw std::invalid_argument("ParameterVector: gamma/beta length mismatch");
        std::vector<double> flat;
        flat.reserve(2 * gammas.size());
        flat.insert(flat.end(), gammas.begin(), gammas.end());
        flat.insert(flat.end(), betas.begin(), betas.end());
        return flat;
    }

    // Reporting domain: gamma in [0, 2pi), beta in [0, pi). Evolution accepts
    // any real angles; reduction is applied only when values are reported.
    ParameterVector canonical() const {
        ParameterVector v = *this;
        for (double& g : v.gammas) g = canonical_angle(g, 2.0 * std::numbers::pi);
        for (double& b : v.betas) b = canonical_angle(b, std::numbers::pi);
        return v;
    }
};

struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    double squared_norm() const {
        double acc = 0.0;
        for (const auto& a : amplitudes) acc += std::norm(a);
        return acc;
    }
};

// Diagonal of the cut Hamiltonian: values[i] is the cut value of basis
// state i. Immutable after construction and shareable across threads.
struct CutSpectrum {
    int n_qubits = 0;
    std::vector<int> values;

    int max_value() const {
        int m = 0;
        for (int v : values)
            if (v > m) m = v;
        return m;
    }
};

inline StateVector prepare_plus_state(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::length_error("prepare_plus_state: qubit count out of supported range");
    const std::size_t dim = 1ULL << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return {n, std::vector<std::complex<double>>(dim, {amp, 0.0})};
}

inline CutSpectrum cut_spectrum(const Graph& g) {
    if (g.n < 1 || g.n > kMaxVertices)
        throw std::length_error("cut_spectrum: vertex count out of supported range");
    CutSpectrum spectrum{g.n, std::vector<int>(1ULL << g.n)};
    for (std::uint64_t i = 0; i < spectrum.values.size(); ++i)
        spectrum.values[i] = cut_value(g, i);
    return spectrum;
}

// amplitude_i *= exp(-i * gamma * values[i]). The identity part of the cost
// Hamiltonian would contribute only a global phase and is omitted.
inline void apply_cost_layer(StateVector& state, const CutSpectrum& spectrum, double gamma) {
    if (state.amplitudes.size() != spectrum.values.size())
        throw std::invalid_argument("apply_cost_layer: dimension mismatch");
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(spectrum.max_value()) + 1);
    for (std::size_t k = 0; k < phase.size(); ++k)
        phase[k] = std::polar(1.0, -gamma * static_cast<double>(k));
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        state.amplitudes[i] *= phase[static_cast<std::size_t>(spectrum.values[i])];
}

// exp(-i * beta * sum_j X_j) factorizes into one 2x2 rotation per qubit,
// applied with stride-2^j index pairing.
inline void apply_mixer_layer(StateVector& state, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    auto* a = state.amplitudes.data();
    const std::size_t dim = state.amplitudes.size();
    for (int q = 0; q < state.n_qubits; ++q) {
        const std::size_t stride = 1ULL << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const std::complex<double> u = a[i];
                const std::complex<double> v = a[i + stride];
                a[i] = {c * u.real() + s * v.imag(), c * u.imag() - s * v.real()};
                a[i + stride] = {s * u.imag() + c * v.real(), c * v.imag() - s * u.real()};
            }
        }
    }
}

// Assembles the depth-p ansatz state: uniform superposition, then for each
// layer q the cost phase with gamma_q followed by the mixer with beta_q.
inline StateVector evolve(const CutSpectrum& spectrum, const ParameterVector& params) {
    if (params.gammas.size() != params.betas.size())
        throw std::invalid_argument("evolve: gamma/beta length mismatch");
    StateVector state = prepare_plus_state(spectrum.n_qubits);
    for (std::size_t q = 0; q < params.gammas.size(); ++q) {
        apply_cost_layer(state, spectrum, params.gammas[q]);
        apply_mixer_layer(state, params.betas[q]);
    }
    return state;
}

inline StateVector evolve(const Graph& g, const ParameterVector& params) {
    return evolve(cut_spectrum(g), params);
}

// Exact expectation of the cut value: sum_i |amplitude_i|^2 * values[i].
// No sampling anywhere.
inline double expectation(const StateVector& state, const CutSpectrum& spectrum) {
    if (state.amplitudes.size() != spectrum.values.size())
        throw std::invalid_argument("expectation: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i)
        acc += std::norm(state.amplitudes[i]) * static_cast<double>(spectrum.values[i]);
    return acc;
}

inline double fp(const Graph& g, const ParameterVector& params) {
    const CutSpectrum spectrum = cut_spectrum(g);
    return expectation(evolve(spectrum, params), spectrum);
}

// Objective for optimizer loops. Owns its spectrum and a scratch state so
// back-to-back evaluations do not reallocate. Not shareable across
// concurrent callers; give each worker its own copy.
class QaoaObjective {
public:
    explicit QaoaObjective(const Graph& g) : spectrum_(cut_spectrum(g)) {}
    explicit QaoaObjective(CutSpectrum spectrum) : spectrum_(std::move(spectrum)) {}

    const CutSpectrum& spectrum() const { return spectrum_; }

    double value(const ParameterVector& params) { return value_flat(params.to_flat()); }

    // Flat layout (gamma_1..gamma_p, beta_1..beta_p).
    double value_flat(std::span<const double> flat) {
        if (flat.size() % 2 != 0)
            throw std::invalid_argument("QaoaObjective: flat size must be even");
        const std::size_t p = flat.size() / 2;
        const std::size_t dim = 1ULL << spectrum_.n_qubits;
        scratch_.n_qubits = spectrum_.n_qubits;
        const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
        scratch_.amplitudes.assign(dim, {amp, 0.0});
        for (std::size_t q = 0; q < p; ++q) {
            apply_cost_layer(scratch_, spectrum_, flat[q]);
            apply_mixer_layer(scratch_, flat[p + q]);
        }
        return expectation(scratch_, spectrum_);
    }

private:
    CutSpectrum spectrum_;
    StateVector scratch_;
};

} // namespace qaoalab

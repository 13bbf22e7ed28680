#pragma once

// Independent reference simulator used only by tests. Builds the mixer
// unitary as a dense matrix exponential through an eigendecomposition of
// H_B, instead of the production code's in-place stride updates, so the two
// implementations share no evolution code.

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <vector>

#include "qaoalab/graph.hpp"
#include "qaoalab/simulator.hpp"

namespace dense_oracle {

inline Eigen::VectorXd cut_diagonal(const qaoalab::Graph& g) {
    const int dim = 1 << g.n;
    Eigen::VectorXd cut(dim);
    for (int z = 0; z < dim; ++z) {
        int c = 0;
        for (auto [j, k] : g.edges)
            if (((z >> j) & 1) != ((z >> k) & 1)) ++c;
        cut[z] = static_cast<double>(c);
    }
    return cut;
}

// H_B = sum_j X_j: matrix element (i, j) is 1 exactly when the basis labels
// differ in a single bit.
inline Eigen::MatrixXd mixer_hamiltonian(int n) {
    const int dim = 1 << n;
    Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (std::popcount(static_cast<unsigned>(i ^ j)) == 1) hb(i, j) = 1.0;
    return hb;
}

inline Eigen::VectorXcd evolve(const qaoalab::Graph& g, const qaoalab::ParameterVector& params) {
    using Complex = std::complex<double>;
    const int dim = 1 << g.n;
    const Eigen::VectorXd cut = cut_diagonal(g);

    const Eigen::MatrixXd hb = mixer_hamiltonian(g.n);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hb);
    const Eigen::MatrixXcd vecs = es.eigenvectors().cast<Complex>();

    Eigen::VectorXcd state = Eigen::VectorXcd::Constant(dim, Complex(1.0 / std::sqrt(dim), 0.0));
    for (std::size_t layer = 0; layer < params.gammas.size(); ++layer) {
        for (int z = 0; z < dim; ++z)
            state[z] *= std::exp(Complex(0.0, -params.gammas[layer] * cut[z]));
        Eigen::VectorXcd phases(dim);
        for (int k = 0; k < dim; ++k)
            phases[k] = std::exp(Complex(0.0, -params.betas[layer] * es.eigenvalues()[k]));
        state = vecs * phases.asDiagonal() * vecs.adjoint() * state;
    }
    return state;
}

inline double expectation(const qaoalab::Graph& g, const qaoalab::ParameterVector& params) {
    const Eigen::VectorXcd state = dense_oracle::evolve(g, params);
    const Eigen::VectorXd cut = cut_diagonal(g);
    double acc = 0.0;
    for (int z = 0; z < state.size(); ++z) acc += std::norm(state[z]) * cut[z];
    return acc;
}

} // namespace dense_oracle

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hamlab/eigensolver.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/report.hpp"

namespace hamlab {

struct TokenGraph {
    int base_n = 0;
    int k = 0;
    std::vector<std::uint64_t> vertices;             // k-subsets as bitmasks, ascending
    std::vector<std::pair<int, int>> edges;          // indices into vertices, first < second
    std::vector<int> degree;

    Eigen::MatrixXd adjacency() const;
};

TokenGraph token_graph(const WeightedGraph& G, int k);

// Spectrum of a D + A over all token graphs of K_{L,L-1} vs the (2L-1)-qubit Hamiltonian
// sum_edges (a+1)|psi+><psi+| + (a-1)|psi-><psi-|.
CheckReport token_spectrum_check(int L, double a);

// N_{k,L}: d_j = a((k-j)(L-j) + j(L-1-(k-j))), beta_j = sqrt((j+1)(j-k+L)(k-j)(L-j))
Tridiagonal symmetrized_matrix(int L, int k, double a);

enum class Picture {
    Maximization,  // eigenvalues of a D + A, as in the token-graph analysis
    Minimization,  // energies of H_{(-1,-1,a)}(K_{L,L-1}) = a|E| - 2 (a D + A)
};

struct BipartiteGadgetResult {
    int L;
    double a;
    double tZ, tX, tY;
    double gL;
    double lambda1;
    double lambda2;  // upper bound on the second-largest eigenvalue, so gap is a lower bound
    double gap;
    Eigen::VectorXd alpha;  // top eigenvector of N_{L-1,L}, positive
    Picture picture;
};

BipartiteGadgetResult bipartite_gadget_coeffs(int L, double a, Picture picture = Picture::Maximization);

CheckReport spectral_bounds_check(int L, double a);
CheckReport alpha0_bound_check(int L, double a);
// t-value bounds, g(L) bounds, eigenvector ratio bounds and the Gershgorin bound of the blocks.
CheckReport coefficient_bounds_check(int L, double a);
// L = 3 only: t-values against vertex_gadget logical_coeffs on the 5-qubit Hamiltonian.
CheckReport token_vertex_crosscheck(double a);

}  // namespace hamlab

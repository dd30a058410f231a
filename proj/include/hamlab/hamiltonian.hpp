#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hamlab/term_algebra.hpp"

namespace hamlab {

inline constexpr int kDefaultQubitCap = 22;
inline constexpr int kHardQubitCap = 26;

struct Edge {
    int i, j;
    double w;
};

class WeightedGraph {
public:
    WeightedGraph() = default;
    // Edges are validated: 0 <= i < j < n, w > 0, no duplicates.
    WeightedGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    static WeightedGraph path(int n, double w = 1.0);
    static WeightedGraph complete_bipartite(int left, int right);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Real symmetric matrix in compressed-row form, rows sorted by column.
struct CsrMatrix {
    std::int64_t dim = 0;
    std::vector<std::int64_t> row_ptr;
    std::vector<std::int64_t> col;
    std::vector<double> val;

    void multiply(const double* x, double* y) const;
    Eigen::VectorXd operator*(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd to_dense() const;
    double norm_inf() const;  // max absolute row sum, an upper bound on the spectral norm
    double coeff(std::int64_t r, std::int64_t c) const;
};

struct SparseHamiltonian {
    int n_qubits = 0;
    CsrMatrix matrix;

    std::int64_t dimension() const { return matrix.dim; }
};

// sum_{(i,j,w)} w (a X_i X_j + b Y_i Y_j + c Z_i Z_j); qubit 0 is the least significant bit.
SparseHamiltonian build_hamiltonian(const PauliTerm& K, const WeightedGraph& G,
                                    int qubit_cap = kDefaultQubitCap);

struct ParityBlocks {
    CsrMatrix even, odd;
    // block row index -> basis bitstring
    std::vector<std::uint64_t> even_states, odd_states;
};

ParityBlocks parity_blocks(const SparseHamiltonian& H);

inline int parity(std::uint64_t s) { return __builtin_popcountll(s) & 1; }

}  // namespace hamlab

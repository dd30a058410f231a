#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include <Eigen/Dense>

#include "hamlab/hamiltonian.hpp"

namespace hamlab {

inline constexpr std::int64_t kDenseCrossover = 4096;
inline constexpr double kDefaultDegeneracyTol = 1e-8;

struct SpectrumSlice {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns
    double degeneracy_tolerance = kDefaultDegeneracyTol;
};

struct LanczosOptions {
    int max_restarts = 200;
    double residual_tol = 1e-10;  // relative to the operator norm estimate
    std::uint64_t seed = 0x5eed1234abcdULL;
};

// Makes the first non-negligible amplitude of every column positive.
void fix_signs(Eigen::MatrixXd& vecs);

SpectrumSlice dense_eigenpairs(const Eigen::MatrixXd& A, std::int64_t k);

// Block Lanczos with full reorthogonalization for the k lowest eigenpairs of a symmetric
// operator given as a matrix-vector product.
SpectrumSlice lanczos_eigenpairs(std::int64_t dim, double norm_estimate,
                                 const std::function<void(const double*, double*)>& matvec, std::int64_t k,
                                 const LanczosOptions& opts = {});

// Dense solver up to kDenseCrossover, block Lanczos beyond.
SpectrumSlice lowest_eigenpairs(const CsrMatrix& H, std::int64_t k);
SpectrumSlice lowest_eigenpairs(const SparseHamiltonian& H, std::int64_t k);

struct GroundSpace {
    double energy;
    int degeneracy;
    Eigen::MatrixXd basis;
    double gap;  // +inf when the whole spectrum is degenerate
    double threshold;
};

// degeneracy = #eigenvalues within tol*max(1, ||H||_inf) of the minimum
GroundSpace ground_space(const CsrMatrix& H, double tol = kDefaultDegeneracyTol);
GroundSpace ground_space(const SparseHamiltonian& H, double tol = kDefaultDegeneracyTol);

// Symmetric tridiagonal matrix with diagonal d (size n) and off-diagonal e (size n-1).
struct Tridiagonal {
    Eigen::VectorXd d, e;

    Eigen::Index size() const { return d.size(); }
    Eigen::MatrixXd to_dense() const;
};

// All eigenvalues in ascending order by Sturm-sequence bisection.
Eigen::VectorXd tridiagonal_eigenvalues(const Tridiagonal& T);
// The i-th smallest eigenvalue (0-based).
double tridiagonal_eigenvalue(const Tridiagonal& T, Eigen::Index i);
// Unit eigenvector for a computed eigenvalue, by inverse iteration with partial pivoting.
Eigen::VectorXd tridiagonal_eigenvector(const Tridiagonal& T, double lambda);

}  // namespace hamlab

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hamlab/report.hpp"
#include "hamlab/term_algebra.hpp"

namespace hamlab {

// Open chain sum_j (1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1}, the rescaled a XX - ZZ chain
// after the YY <-> ZZ interchange.
struct ChainSpec {
    int L;     // odd, >= 3
    double a;  // > 1

    ChainSpec(int L, double a);
    int m() const { return (L + 1) / 2; }
    double r() const { return -a; }
    double gamma() const { return (r() - 1) / (r() + 1); }
};

struct ChainSolution {
    Eigen::VectorXd singular_values;  // ascending, L values
    double V_1q;
    double U_1q;
    double effective_yy_ratio;  // 1/r^L
    // Blocks of S^T S: odd sites 1,3,..,L (m entries) and even sites 2,4,..,L-1 (m-1 entries).
    Eigen::VectorXd odd_block_eigs, even_block_eigs;
    Eigen::VectorXd zero_mode;  // unit eigenvector of the odd block for eigenvalue 0
};

ChainSolution solve_chain(const ChainSpec& spec);

// (1, 1/r^L, 0) = (1, -1/|r|^L, 0)
PauliTerm chain_effective_term(const ChainSpec& spec);
// after YY <-> ZZ interchange and rescaling: (|r|^L, 0, -1)
PauliTerm chain_effective_term_interchanged(const ChainSpec& spec);

inline constexpr int kChainEdBudget = 13;

CheckReport crosscheck_chain(const ChainSpec& spec);

}  // namespace hamlab

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hamlab/hamiltonian.hpp"
#include "hamlab/term_algebra.hpp"
#include "hamlab/vertex_gadget.hpp"

namespace hamlab {

struct GadgetSpec {
    std::string name;
    int n_qubits = 0;
    bool second_order = true;
    Eigen::MatrixXd H0;
    Eigen::MatrixXd V;        // first order only
    Eigen::MatrixXd V_main;   // second order
    Eigen::MatrixXd V_extra;  // second order
    double Delta = 1.0;
    Eigen::MatrixXd target;    // logical space
    Eigen::MatrixXd encoding;  // simulator_dim x logical_dim, orthonormal columns

    Eigen::MatrixXd simulator() const;
};

struct SimulationReport {
    double epsilon;
    double eta;
    double gap_above;
    double Delta;
    double shift;  // optimal identity shift c in target - E~^T H E~ - c I
};

SimulationReport measure_simulation(const GadgetSpec& spec);

// Spectral norm of D - cI minimised over c, i.e. half the spread of eig(D).
std::pair<double, double> norm_modulo_identity(const Eigen::MatrixXd& D);

struct AnalyticCheck {
    double mismatch;           // || E^T H_eff E - target || modulo identity
    double main_diag_block;    // || P- V_main P- ||
    double extra_offdiag;      // || P- V_extra P+ ||
    double encoding_leak;      // || P+ E ||
    double h0_ground, h0_first_excited;
    Eigen::MatrixXd effective;  // E^T H_eff E
};

// Second order: (V_extra)-- - (V_main)-+ H0^{-1} (V_main)+-; first order: (V)--.
AnalyticCheck analytic_effective(const GadgetSpec& spec);

// n-qubit dense operator of a single 2-local term on (i, j)
Eigen::MatrixXd two_local(int n, int i, int j, const PauliTerm& K, double w = 1.0);
// single-qubit Z on qubit i
Eigen::MatrixXd single_z(int n, int i);

enum class EdgeGadgetScaling {
    Corrected,     // effective Hamiltonian equals mu1 K1 + mu2 K2 + mu3 K3
    Literal,    // unscaled main coupler, extra term 2 mu1 (a-b) K_ij (does not reproduce the target)
};

// Qubits (i, j, y, z) = (0, 1, 2, 3); logical qubits (i, j).
GadgetSpec build_edge_gadget(double a, double b, double mu1, double mu2, double mu3, double Delta,
                             EdgeGadgetScaling scaling = EdgeGadgetScaling::Corrected);

// Qubits i' = 2i, i'' = 2i+1; alphas aligned with G.edges() (weights of G are ignored).
GadgetSpec build_tim_gadget(const WeightedGraph& G, const std::vector<double>& alphas,
                            const std::vector<double>& betas, double Delta);

// Two copies of a vertex gadget G (copy 2 on qubits offset by |G|), H0 = their Hamiltonians
// shifted and scaled to ground energy 0 and unit gap, V = K on the cross edge (u, |G|+v).
// Logical |0> is the even-parity ground vector chi, |1> its global bit flip.
GadgetSpec build_vertex_gadget_pair(const PauliTerm& K, const WeightedGraph& G, int u, int v, double Delta);

struct ComposedError {
    double eta, eps;
};

ComposedError compose_errors(double eta1, double eps1, double eta2, double eps2, double delta, double normH);

}  // namespace hamlab

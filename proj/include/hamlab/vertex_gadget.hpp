#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hamlab/eigensolver.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/term_algebra.hpp"

namespace hamlab {

struct SiteCoefficients {
    double tX, tY, tZ;
};

struct LogicalCoefficients {
    std::vector<SiteCoefficients> sites;
    Eigen::VectorXd ground_vector;             // chi over even-parity bitstrings, unit norm, sign-fixed
    std::vector<std::uint64_t> even_states;    // bitstring of each ground_vector entry
    double gap = 0;
    double energy = 0;

    // Coefficients after rescaling chi by 1/chi(state); every t scales by the same factor.
    LogicalCoefficients rescaled_to(std::uint64_t state) const;
};

struct GadgetOptions {
    double tol_degeneracy = kDefaultDegeneracyTol;
    double min_gap = 1e-6;
    int qubit_cap = kDefaultQubitCap;
};

LogicalCoefficients logical_coeffs(const PauliTerm& K, const WeightedGraph& gadget, const GadgetOptions& opts = {});

struct EffectiveTerm {
    PauliTerm term;
    int u, v;
    std::string parent;
};

EffectiveTerm effective_term(const PauliTerm& K, const LogicalCoefficients& coeffs, int u, int v);

// Arrow of the P3 flow diagram: normal form of the effective term obtained by coupling
// site `site` (0-based) of two P3 gadgets.
PauliTerm p3_flow(const PauliTerm& K, int site = 2, const GadgetOptions& opts = {});

struct FlowPoint {
    double a, b;
    double a_prime, b_prime;
    bool valid;
    std::string reason;  // empty when valid
};

// Arrows for K = (a, b, -1) over [a_lo, a_hi] x [b_lo, b_hi]; a_lo excluded when open_low.
std::vector<FlowPoint> flow_field(double a_lo, double a_hi, double b_lo, double b_hi, int na, int nb,
                                  bool open_low = true, int site = 2, const GadgetOptions& opts = {});

// The five-node gadget T: path 1-2-3 with 3 joined to 4 and 5 (vertices 0..4 here).
WeightedGraph five_node_graph();
// Basis index of the amplitude the reference normalization sets to 1.0.
inline constexpr std::uint64_t kFiveNodeReferenceState = 0b01111;

struct FiveNodeResult {
    double p12, p22, xx_strength;
    SiteCoefficients t1, t2;  // in the reference normalization
    Eigen::VectorXd even_spectrum;
    Eigen::VectorXd ground_vector;  // reference normalization, reference ordering (site 1 most significant)
    bool weights_nonnegative;
};

FiveNodeResult five_node_weights(double b, const GadgetOptions& opts = {});

// Map between qubit-0-LSB bitstrings and the reference ordering (site 1 most significant).
std::uint64_t reverse_bits(std::uint64_t s, int n);

}  // namespace hamlab

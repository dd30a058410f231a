#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/term_algebra.hpp"

namespace hamlab {

enum class Phase { QMA_COMPLETE, NP_COMPLETE, STOQMA_COMPLETE, EPRSTAR_REDUCIBLE, P_TRIVIAL };

const char* phase_name(Phase p);

struct PhaseLabel {
    Phase phase;
    std::string note;
    // Two or more triplets share the lowest energy level with nothing below them: the ground
    // space contains a product state and the problem is trivially in P.
    bool p_trivial = false;

    // Label used for the arrangement diagram: P_TRIVIAL when flagged, otherwise phase.
    Phase figure_phase() const { return p_trivial ? Phase::P_TRIVIAL : phase; }
};

// Exact comparisons, no tolerance: phase boundaries are measure-zero sets.
PhaseLabel classify(const BellTerm& t);
PhaseLabel classify_toy(double s);

struct EprStarDecomposition {
    double a_prime, b_prime;
    double b;
    double p1, p2, p3;

    static double f(double b) { return b * b * (1 - b) / 2; }
    // p1 (1,b,-1) + p2 (1,-f(b),-1) + p3 (-1,-f(b),-1)
    PauliTerm reconstruct() const;
};

EprStarDecomposition epr_star_decompose(double a_prime, double b_prime);

// Weak ordering of one singlet S and three triplets T, lowest group first.
struct Arrangement {
    std::vector<std::string> groups;  // each "S", "T", "ST", "TT", ... with S first

    std::string encode() const;  // groups joined by '<', e.g. "T<STT"
    static Arrangement decode(const std::string& s);
    int triplets_off_singlet() const;  // s: triplets not degenerate with the singlet
    // Representative Bell energies: level of each group minus the singlet level, canonical order.
    BellTerm representative() const;
    bool operator==(const Arrangement& o) const { return groups == o.groups; }
};

std::vector<Arrangement> enumerate_arrangements();

// F(s) = 2*2^(s-1) + [s>1](s-1)2^(s-2)
int arrangement_count_formula(int s);

struct FlowDag {
    std::vector<Arrangement> nodes;
    std::vector<PhaseLabel> labels;
    std::vector<std::pair<int, int>> edges;  // from -> to: to arises by strictly lowering one triplet

    int index_of(const std::string& code) const;
    bool has_edge(int from, int to) const;
    bool has_path(int from, int to) const;
    // Shortest path (node indices) from any node with phase `from` to node `to`; empty if none.
    std::vector<int> path_from_phase(Phase from, int to) const;
    std::string to_json() const;
    std::string to_dot() const;
};

inline constexpr const char* kEprArrangement = "T<STT";
inline constexpr const char* kMaxCutArrangement = "ST<TT";

FlowDag singlet_flow_dag();

}  // namespace hamlab

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamlab/edge_gadget.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/sim_verifier.hpp"
#include "hamlab/term_algebra.hpp"
#include "hamlab/vertex_gadget.hpp"

namespace hamlab::io {

using nlohmann::json;

json to_json(const PauliTerm& t);
json to_json(const BellTerm& t);
json to_json(const SiteCoefficients& s);
json to_json(const SimulationReport& r);
json to_json(const WeightedGraph& g);

// {"n": 3, "edges": [[0, 1, 1.0], [1, 2]]}; weight defaults to 1
WeightedGraph graph_from_json(const json& j);
// "path:N", "bipartite:L" (K_{L,L-1}), "five-node", or a JSON file path
WeightedGraph parse_graph(const std::string& spec);

// fixed schema a,b,a_prime,b_prime,valid
void write_flow_csv(std::ostream& os, const std::vector<FlowPoint>& pts);
void write_trajectory_csv(std::ostream& os, const std::vector<std::pair<double, double>>& traj);

// shortest round-trip decimal representation
std::string num(double x);

}  // namespace hamlab::io

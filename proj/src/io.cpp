#include "hamlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "hamlab/errors.hpp"

namespace hamlab::io {

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json to_json(const PauliTerm& t) { return {{"a", t.a}, {"b", t.b}, {"c", t.c}}; }
json to_json(const BellTerm& t) { return {{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}}; }
json to_json(const SiteCoefficients& s) { return {{"tX", s.tX}, {"tY", s.tY}, {"tZ", s.tZ}}; }

json to_json(const SimulationReport& r) {
    return {{"delta", r.Delta}, {"epsilon", r.epsilon}, {"eta", r.eta}, {"gap_above", r.gap_above}};
}

json to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.w});
    return {{"n", g.n()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw DomainError("graph JSON: edge must be [i, j] or [i, j, w]");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a > b) std::swap(a, b);
            edges.push_back({a, b, e.size() == 3 ? e[2].get<double>() : 1.0});
        }
        return WeightedGraph(n, std::move(edges));
    } catch (const json::exception& ex) {
        throw DomainError(std::string("graph JSON: ") + ex.what());
    }
}

WeightedGraph parse_graph(const std::string& spec) {
    auto suffix_int = [&](std::size_t pos) {
        try {
            return std::stoi(spec.substr(pos));
        } catch (const std::exception&) {
            throw DomainError("graph spec: bad size in '" + spec + "'");
        }
    };
    if (spec.rfind("path:", 0) == 0) return WeightedGraph::path(suffix_int(5));
    if (spec.rfind("bipartite:", 0) == 0) {
        const int L = suffix_int(10);
        return WeightedGraph::complete_bipartite(L, L - 1);
    }
    if (spec == "five-node") return five_node_graph();
    std::ifstream in(spec);
    if (!in) throw DomainError("graph spec: expected path:N, bipartite:L, five-node or a readable JSON file, got '" + spec + "'");
    try {
        return graph_from_json(json::parse(in));
    } catch (const json::parse_error& ex) {
        throw DomainError(std::string("graph JSON: ") + ex.what());
    }
}

void write_flow_csv(std::ostream& os, const std::vector<FlowPoint>& pts) {
    os << "a,b,a_prime,b_prime,valid\n";
    for (const auto& p : pts)
        os << num(p.a) << ',' << num(p.b) << ',' << (p.valid ? num(p.a_prime) : "") << ','
           << (p.valid ? num(p.b_prime) : "") << ',' << (p.valid ? 1 : 0) << '\n';
}

void write_trajectory_csv(std::ostream& os, const std::vector<std::pair<double, double>>& traj) {
    os << "step,a,b\n";
    for (std::size_t k = 0; k < traj.size(); ++k) os << k << ',' << num(traj[k].first) << ',' << num(traj[k].second) << '\n';
}

}  // namespace hamlab::io

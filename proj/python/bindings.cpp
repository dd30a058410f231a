#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamlab/acceptance.hpp"
#include "hamlab/classifier.hpp"
#include "hamlab/edge_gadget.hpp"
#include "hamlab/eigensolver.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/sim_verifier.hpp"
#include "hamlab/term_algebra.hpp"
#include "hamlab/token_gadget.hpp"
#include "hamlab/vertex_gadget.hpp"
#include "hamlab/xy_chain.hpp"

namespace py = pybind11;
using namespace hamlab;

namespace {

using Triple = std::tuple<double, double, double>;

PauliTerm pauli(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
BellTerm bell(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple tup(const PauliTerm& t) { return {t.a, t.b, t.c}; }
Triple tup(const BellTerm& t) { return {t.alpha, t.beta, t.gamma}; }
Triple tup(const SiteCoefficients& s) { return {s.tX, s.tY, s.tZ}; }

WeightedGraph graph(int n, const std::vector<Triple>& edges) {
    std::vector<Edge> es;
    for (const auto& [i, j, w] : edges) es.push_back({static_cast<int>(i), static_cast<int>(j), w});
    return WeightedGraph(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_hamlab, m) {
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GadgetInvalid>(m, "GadgetInvalid", PyExc_RuntimeError);

    m.def("pauli_to_bell", [](const Triple& t) {
        const auto r = pauli_to_bell(pauli(t));
        return py::make_tuple(tup(r.bell), r.offset);
    });
    m.def("bell_to_pauli", [](const Triple& t) {
        const auto r = bell_to_pauli(bell(t));
        return py::make_tuple(tup(r.pauli), r.offset);
    });
    m.def("normal_form", [](const Triple& t) {
        const auto r = normal_form(pauli(t));
        return py::make_tuple(tup(r.term), r.perm, r.scale);
    });
    m.def("toy_term", [](double s) { return tup(toy_term(s)); });
    m.def("epr_star_term", [](double b) { return tup(epr_star_term(b)); });

    m.def("classify", [](const Triple& t) { return std::string(phase_name(classify(bell(t)).phase)); });
    m.def("classify_toy", [](double s) { return std::string(phase_name(classify_toy(s).phase)); });
    m.def("epr_star_decompose", [](double ap, double bp) {
        const auto d = epr_star_decompose(ap, bp);
        return py::dict(py::arg("b") = d.b, py::arg("p1") = d.p1, py::arg("p2") = d.p2, py::arg("p3") = d.p3);
    });
    m.def("arrangements", [] {
        std::vector<std::string> out;
        for (const auto& a : enumerate_arrangements()) out.push_back(a.encode());
        return out;
    });

    m.def(
        "hamiltonian",
        [](const Triple& K, int n, const std::vector<Triple>& edges) {
            return build_hamiltonian(pauli(K), graph(n, edges)).matrix.to_dense();
        },
        py::arg("K"), py::arg("n"), py::arg("edges"));
    m.def(
        "ground_energy",
        [](const Triple& K, int n, const std::vector<Triple>& edges) {
            const auto gs = ground_space(build_hamiltonian(pauli(K), graph(n, edges)));
            return py::make_tuple(gs.energy, gs.degeneracy, gs.gap);
        },
        py::arg("K"), py::arg("n"), py::arg("edges"));

    m.def(
        "logical_coeffs",
        [](const Triple& K, int n, const std::vector<Triple>& edges) {
            std::vector<Triple> out;
            for (const auto& s : logical_coeffs(pauli(K), graph(n, edges)).sites) out.push_back(tup(s));
            return out;
        },
        py::arg("K"), py::arg("n"), py::arg("edges"));
    m.def("p3_flow", [](const Triple& K) { return tup(p3_flow(pauli(K))); });
    m.def("five_node_weights", [](double b) {
        const auto r = five_node_weights(b);
        return py::dict(py::arg("p12") = r.p12, py::arg("p22") = r.p22, py::arg("xx_strength") = r.xx_strength,
                        py::arg("t1") = tup(r.t1), py::arg("t2") = tup(r.t2));
    });

    m.def("edge_map", [](double a, double b) {
        const auto r = edge_map(a, b);
        return py::make_tuple(r.a_prime, r.b_prime);
    });
    m.def("recurse_boost", [](double a, double b, double mu) {
        const auto r = recurse_boost(a, b, mu);
        return py::make_tuple(r.k, r.trajectory);
    });
    m.def("edge_gadget_epsilon", [](double a, double b, const Triple& mu, double Delta) {
        const auto [m1, m2, m3] = mu;
        return measure_simulation(build_edge_gadget(a, b, m1, m2, m3, Delta)).epsilon;
    });

    m.def("solve_chain", [](int L, double a) {
        const auto s = solve_chain(ChainSpec(L, a));
        return py::dict(py::arg("singular_values") = s.singular_values, py::arg("V_1q") = s.V_1q,
                        py::arg("U_1q") = s.U_1q, py::arg("effective_yy_ratio") = s.effective_yy_ratio);
    });
    m.def("chain_effective_term", [](int L, double a) { return tup(chain_effective_term(ChainSpec(L, a))); });

    m.def("bipartite_gadget_coeffs", [](int L, double a) {
        const auto r = bipartite_gadget_coeffs(L, a);
        return py::dict(py::arg("tX") = r.tX, py::arg("tY") = r.tY, py::arg("tZ") = r.tZ, py::arg("gL") = r.gL,
                        py::arg("gap") = r.gap);
    });

    m.def(
        "run_acceptance",
        [](const std::string& csv) {
            AcceptanceOptions opts;
            opts.flow_csv_path = csv;
            std::vector<py::dict> out;
            for (const auto& r : run_acceptance(opts))
                out.push_back(py::dict(py::arg("id") = r.id, py::arg("name") = r.name, py::arg("pass") = r.pass,
                                       py::arg("details") = r.details));
            return out;
        },
        py::arg("flow_csv") = "");
}

#include "doctest.h"

#include "hamlab/errors.hpp"
#include "hamlab/sim_verifier.hpp"
#include "hamlab/vertex_gadget.hpp"

using namespace hamlab;
using doctest::Approx;

TEST_SUITE("sim_verifier") {
    TEST_CASE("exact embedding") {
        // logical qubit 0, ancilla qubit 1 penalised when excited
        GadgetSpec s;
        s.name = "exact";
        s.n_qubits = 2;
        s.second_order = false;
        s.Delta = 50;
        Eigen::Matrix2d T;
        T << 0.3, 1.0, 1.0, -0.7;
        s.target = T;
        s.H0 = Eigen::MatrixXd::Zero(4, 4);
        s.H0(2, 2) = s.H0(3, 3) = 1;
        s.V = Eigen::MatrixXd::Zero(4, 4);
        s.V.topLeftCorner(2, 2) = T;
        s.encoding = Eigen::MatrixXd::Zero(4, 2);
        s.encoding(0, 0) = s.encoding(1, 1) = 1;
        const auto r = measure_simulation(s);
        CHECK(r.epsilon <= 1e-10);
        CHECK(r.eta <= 1e-10);
    }

    TEST_CASE("norm modulo identity") {
        Eigen::MatrixXd D = Eigen::Vector3d(1, 2, 5).asDiagonal();
        const auto [n, c] = norm_modulo_identity(D);
        CHECK(n == Approx(2));
        CHECK(c == Approx(3));
    }

    TEST_CASE("edge gadget, corrected scaling") {
        for (auto [a, b] : {std::pair{2.0, -1.0}, {2.0, 0.3}, {1.5, -0.5}}) {
            const auto chk = analytic_effective(build_edge_gadget(a, b, 1, 1, 1, 1));
            CHECK(chk.mismatch <= 1e-12);
            CHECK(chk.main_diag_block <= 1e-12);
            CHECK(chk.extra_offdiag <= 1e-12);
            CHECK(chk.encoding_leak <= 1e-12);
            CHECK(chk.h0_ground == Approx(0).scale(1));
            CHECK(chk.h0_first_excited == Approx(1));
        }
        const auto k2 = analytic_effective(build_edge_gadget(1, -1, 0, 1, 0, 1));
        CHECK(k2.mismatch <= 1e-12);
        const Eigen::MatrixXd want = two_local(2, 0, 1, {1, -1, -1});
        CHECK(norm_modulo_identity(k2.effective - want).first <= 1e-12);
    }

    TEST_CASE("edge gadget, displayed scaling does not reproduce the target") {
        const auto chk = analytic_effective(build_edge_gadget(2, -1, 1, 1, 1, 1, EdgeGadgetScaling::Literal));
        CHECK(chk.mismatch > 0.1);
    }

    TEST_CASE("edge gadget convergence") {
        std::vector<double> eps;
        for (double D : {1e2, 1e3, 1e4}) eps.push_back(measure_simulation(build_edge_gadget(2, -1, 1, 1, 1, D)).epsilon);
        CHECK(eps[0] == Approx(1.4496).epsilon(1e-3));
        CHECK(eps[1] == Approx(0.6835).epsilon(1e-3));
        CHECK(eps[2] == Approx(0.2261).epsilon(1e-3));
        for (int k = 0; k < 2; ++k) {
            const double ratio = eps[k] / eps[k + 1];
            CHECK(ratio >= std::sqrt(10.0) / 2);
            CHECK(ratio <= 2 * std::sqrt(10.0));
        }
    }

    TEST_CASE("transverse-field Ising gadget") {
        const WeightedGraph p3 = WeightedGraph::path(3);
        const auto chk = analytic_effective(build_tim_gadget(p3, {1, 0.5}, {1, 0.5, 0.7}, 1));
        CHECK(chk.mismatch <= 1e-12);
        const double e1 = measure_simulation(build_tim_gadget(p3, {1, 0.5}, {1, 0.5, 0.7}, 1e2)).epsilon;
        const double e2 = measure_simulation(build_tim_gadget(p3, {1, 0.5}, {1, 0.5, 0.7}, 1e4)).epsilon;
        CHECK(e2 < e1);
        CHECK(e2 <= 0.05);

        // no transverse field: the XX couplings commute with H0 and the simulation is exact
        CHECK(measure_simulation(build_tim_gadget(p3, {1, 0.5}, {0, 0, 0}, 1e2)).epsilon <= 1e-10);
        CHECK(measure_simulation(build_tim_gadget(p3, {1, 0.5}, {0, 0, 0}, 1e3)).epsilon <= 1e-10);
        CHECK(analytic_effective(build_tim_gadget(p3, {1, 0.5}, {0, 0, 0}, 1)).mismatch <= 1e-12);

        CHECK_THROWS_AS(build_tim_gadget(WeightedGraph(1, {}), {}, {1}, 1), DomainError);
    }

    TEST_CASE("first-order vertex gadget pair") {
        const PauliTerm K{2, 0, -1};
        const WeightedGraph p3 = WeightedGraph::path(3);
        const auto chk = analytic_effective(build_vertex_gadget_pair(K, p3, 2, 2, 1));
        CHECK(chk.mismatch <= 1e-10);
        const double e1 = measure_simulation(build_vertex_gadget_pair(K, p3, 2, 2, 1e2)).epsilon;
        const double e2 = measure_simulation(build_vertex_gadget_pair(K, p3, 2, 2, 1e3)).epsilon;
        CHECK(e2 < e1);
        // at least first-order convergence (measured: the error falls like 1/Delta^2 here)
        CHECK(e1 / e2 >= 5);
    }

    TEST_CASE("compose_errors") {
        const auto z = compose_errors(0, 0, 0, 0, 1, 1);
        CHECK(z.eta == 0);
        CHECK(z.eps == 0);
        const auto c = compose_errors(0.01, 0.01, 0.01, 0.01, 1, 10);
        CHECK(c.eta == Approx(0.03));
        CHECK(c.eps == Approx(0.12));
        CHECK_THROWS_AS(compose_errors(0, 0.1, 0, 0.25, 0.5, 1), DomainError);
    }
}

#include <random>

#include "doctest.h"

#include "hamlab/eigensolver.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/hamiltonian.hpp"

using namespace hamlab;
using doctest::Approx;

TEST_SUITE("eigensolver") {
    TEST_CASE("small examples") {
        const auto zz = build_hamiltonian({0, 0, 1}, WeightedGraph(2, {{0, 1, 1.0}}));
        const auto s = lowest_eigenpairs(zz, 2);
        CHECK(s.eigenvalues(0) == Approx(-1));
        CHECK(s.eigenvalues(1) == Approx(-1));

        const auto heis = build_hamiltonian({1, 1, 1}, WeightedGraph(2, {{0, 1, 1.0}}));
        const auto g = lowest_eigenpairs(heis, 1);
        CHECK(g.eigenvalues(0) == Approx(-3));
        const double r = 1 / std::sqrt(2.0);
        CHECK(g.eigenvectors(1, 0) == Approx(r));
        CHECK(g.eigenvectors(2, 0) == Approx(-r));

        const GroundSpace gs = ground_space(heis);
        CHECK(gs.energy == Approx(-3));
        CHECK(gs.degeneracy == 1);
        CHECK(gs.gap == Approx(4));
    }

    TEST_CASE("gadget degeneracies") {
        CHECK(ground_space(build_hamiltonian({2, 0, -1}, WeightedGraph::path(3))).degeneracy == 2);
        const double g = 3;
        const GroundSpace chain = ground_space(build_hamiltonian({1 + g, 1 - g, 0}, WeightedGraph::path(3)));
        CHECK(chain.degeneracy == 2);
    }

    TEST_CASE("Lanczos agrees with dense below the median") {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> U(-1, 1), W(0.2, 1.5);
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Edge> edges;
            for (int i = 0; i < 10; ++i)
                for (int j = i + 1; j < 10; ++j)
                    if (U(rng) > 0.3) edges.push_back({i, j, W(rng)});
            const auto H = build_hamiltonian({U(rng), U(rng), U(rng)}, WeightedGraph(10, edges));
            const Eigen::MatrixXd A = H.matrix.to_dense();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
            const int k = 12;
            const auto lz = lanczos_eigenpairs(H.matrix.dim, H.matrix.norm_inf(),
                                               [&](const double* x, double* y) { H.matrix.multiply(x, y); }, k);
            for (int i = 0; i < k; ++i) CHECK(std::abs(lz.eigenvalues(i) - es.eigenvalues()(i)) <= 1e-8);
            for (int i = 0; i < k; ++i) {
                const Eigen::VectorXd v = lz.eigenvectors.col(i);
                CHECK((A * v - lz.eigenvalues(i) * v).norm() <= 1e-9 * H.matrix.norm_inf());
            }
        }
    }

    TEST_CASE("Lanczos path above the dense crossover") {
        // 13 qubits = 8192 > 4096: lowest_eigenpairs goes through Lanczos
        const auto H = build_hamiltonian({1, 1, 1}, WeightedGraph::path(13));
        const auto s = lowest_eigenpairs(H, 3);
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXd v = s.eigenvectors.col(i);
            CHECK((H.matrix * v - s.eigenvalues(i) * v).norm() <= 1e-9 * H.matrix.norm_inf());
        }
        CHECK(s.eigenvalues(0) <= s.eigenvalues(1));
        // open Heisenberg chain, odd length: doublet ground state
        const GroundSpace gs = ground_space(H);
        CHECK(gs.degeneracy == 2);
    }

    TEST_CASE("tridiagonal routines") {
        const int n = 50;
        Tridiagonal T{Eigen::VectorXd::Constant(n, 2.0), Eigen::VectorXd::Constant(n - 1, -1.0)};
        const Eigen::VectorXd ev = tridiagonal_eigenvalues(T);
        for (int k = 1; k <= n; ++k) CHECK(ev(k - 1) == Approx(2 - 2 * std::cos(k * M_PI / (n + 1))).epsilon(1e-12));
        const Eigen::MatrixXd D = T.to_dense();
        for (int k : {0, 7, n - 1}) {
            const Eigen::VectorXd v = tridiagonal_eigenvector(T, ev(k));
            CHECK(v.norm() == Approx(1));
            CHECK((D * v - ev(k) * v).norm() <= 1e-10);
        }
        CHECK(tridiagonal_eigenvalue(T, n - 1) == Approx(ev(n - 1)));
    }

    TEST_CASE("sign convention") {
        Eigen::MatrixXd v(3, 1);
        v << -0.0, -0.6, 0.8;
        fix_signs(v);
        CHECK(v(1, 0) == Approx(0.6));
        CHECK(v(2, 0) == Approx(-0.8));
    }
}

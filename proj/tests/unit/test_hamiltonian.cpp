#include <cmath>
#include <random>

#include "doctest.h"

#include "hamlab/eigensolver.hpp"
#include "hamlab/errors.hpp"
#include "hamlab/hamiltonian.hpp"

using namespace hamlab;
using doctest::Approx;

namespace {

// Kronecker-product oracle, independent of the bit-twiddling builder
Eigen::MatrixXd dense_oracle(const PauliTerm& K, const WeightedGraph& G) {
    using C = std::complex<double>;
    Eigen::Matrix2cd X, Y, Z, I;
    X << 0, 1, 1, 0;
    Y << 0, C(0, -1), C(0, 1), 0;
    Z << 1, 0, 0, -1;
    I.setIdentity();
    const int n = G.n();
    auto op = [&](int i, int j, const Eigen::Matrix2cd& P) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
        for (int q = n - 1; q >= 0; --q) {
            const Eigen::Matrix2cd& f = (q == i || q == j) ? P : I;
            Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
            m = next;
        }
        return m;
    };
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& e : G.edges()) H += e.w * (K.a * op(e.i, e.j, X) + K.b * op(e.i, e.j, Y) + K.c * op(e.i, e.j, Z));
    CHECK(H.imag().cwiseAbs().maxCoeff() <= 1e-14);
    return H.real();
}

}  // namespace

TEST_SUITE("hamiltonian") {
    TEST_CASE("graph validation") {
        CHECK_THROWS_AS(WeightedGraph(3, {{1, 1, 1.0}}), DomainError);
        CHECK_THROWS_AS(WeightedGraph(3, {{0, 3, 1.0}}), DomainError);
        CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 0.0}}), DomainError);
        CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1.0}, {0, 1, 2.0}}), DomainError);
        CHECK(WeightedGraph::complete_bipartite(3, 2).edges().size() == 6);
        CHECK(WeightedGraph::path(4).edges().size() == 3);
    }

    TEST_CASE("single-edge examples") {
        const WeightedGraph e(2, {{0, 1, 1.0}});
        const Eigen::MatrixXd zz = build_hamiltonian({0, 0, 1}, e).matrix.to_dense();
        CHECK(zz.diagonal() == Eigen::Vector4d(1, -1, -1, 1));
        CHECK((zz - Eigen::MatrixXd(zz.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0);
        const auto heis = build_hamiltonian({1, 1, 1}, e);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(heis.matrix.to_dense());
        CHECK(es.eigenvalues()(0) == Approx(-3));
        for (int k = 1; k < 4; ++k) CHECK(es.eigenvalues()(k) == Approx(1));
    }

    TEST_CASE("triangle minima") {
        const WeightedGraph tri(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
        // XX - YY - ZZ = 1 - 4|phi-><phi-| per edge; the triangle reaches -5, not 3 x (-1)
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> epr(build_hamiltonian({1, -1, -1}, tri).matrix.to_dense());
        CHECK(epr.eigenvalues()(0) == Approx(-5).epsilon(1e-12));
        CHECK(epr.eigenvalues()(1) == Approx(-5).epsilon(1e-12));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> heis(build_hamiltonian({1, 1, 1}, tri).matrix.to_dense());
        CHECK(heis.eigenvalues()(0) == Approx(-3).epsilon(1e-12));
    }

    TEST_CASE("sparse builder matches Kronecker oracle") {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> U(-2, 2), W(0.1, 2);
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 3 + trial;
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (U(rng) > 0) edges.push_back({i, j, W(rng)});
            if (edges.empty()) edges.push_back({0, 1, 1.0});
            const WeightedGraph G(n, edges);
            const PauliTerm K{U(rng), U(rng), U(rng)};
            const Eigen::MatrixXd A = build_hamiltonian(K, G).matrix.to_dense();
            CHECK((A - dense_oracle(K, G)).cwiseAbs().maxCoeff() <= 1e-14);
            CHECK((A - A.transpose()).cwiseAbs().maxCoeff() == 0);
        }
    }

    TEST_CASE("qubit cap") {
        CHECK_THROWS_AS(build_hamiltonian({1, 1, 1}, WeightedGraph::path(23)), DomainError);
        CHECK_THROWS_AS(build_hamiltonian({1, 1, 1}, WeightedGraph::path(27), 30), DomainError);
    }

    TEST_CASE("parity blocks") {
        const auto triv = parity_blocks(build_hamiltonian({1, 1, 1}, WeightedGraph(1, {})));
        CHECK(triv.even.dim == 1);
        CHECK(triv.odd.dim == 1);
        CHECK(triv.even.to_dense()(0, 0) == 0);

        const auto pb = parity_blocks(build_hamiltonian({1, 1, 1}, WeightedGraph(2, {{0, 1, 1.0}})));
        CHECK(pb.even_states == std::vector<std::uint64_t>{0, 3});
        CHECK(pb.odd_states == std::vector<std::uint64_t>{1, 2});
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pb.odd.to_dense());
        CHECK(es.eigenvalues()(0) == Approx(-3));
        CHECK(es.eigenvalues()(1) == Approx(1));

        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> U(-2, 2);
        const WeightedGraph G(6, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 2.0}, {3, 4, 1.0}, {4, 5, 1.5}, {0, 5, 0.7}, {1, 4, 0.3}});
        const auto H = build_hamiltonian({U(rng), U(rng), U(rng)}, G);
        const auto blocks = parity_blocks(H);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(H.matrix.to_dense()), ev(blocks.even.to_dense()),
            od(blocks.odd.to_dense());
        std::vector<double> merged;
        for (int k = 0; k < ev.eigenvalues().size(); ++k) merged.push_back(ev.eigenvalues()(k));
        for (int k = 0; k < od.eigenvalues().size(); ++k) merged.push_back(od.eigenvalues()(k));
        std::sort(merged.begin(), merged.end());
        for (std::size_t k = 0; k < merged.size(); ++k) CHECK(std::abs(merged[k] - full.eigenvalues()(k)) <= 1e-10);
    }

    TEST_CASE("edge-weight dependence of the ground energy") {
        // E0(w) is concave with slope <K_e> (Hellmann-Feynman), bounded below by the K minimum
        const PauliTerm K{0.3, -1.0, 0.8};
        double prev_slope = INFINITY;
        for (double w = 0.2; w <= 3.0; w += 0.2) {
            auto e0 = [&](double x) {
                const WeightedGraph G(4, {{0, 1, 1.0}, {1, 2, x}, {2, 3, 1.0}, {0, 3, 0.5}});
                return ground_space(build_hamiltonian(K, G)).energy;
            };
            const double h = 1e-5, slope = (e0(w + h) - e0(w - h)) / (2 * h);
            CHECK(slope <= prev_slope + 1e-6);
            prev_slope = slope;
        }
        // monotonicity in w does not hold in general: frustrated ZZ triangle, E0 = -2 + w for w < 1
        auto tri = [](double w) {
            return ground_space(build_hamiltonian({0, 0, 1}, WeightedGraph(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, w}}))).energy;
        };
        CHECK(tri(0.5) == Approx(-1.5));
        CHECK(tri(0.8) == Approx(-1.2));
        CHECK(tri(0.8) > tri(0.5));
    }
}

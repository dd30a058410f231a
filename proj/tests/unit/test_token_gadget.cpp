#include <bit>

#include "doctest.h"

#include "hamlab/errors.hpp"
#include "hamlab/token_gadget.hpp"

using namespace hamlab;
using doctest::Approx;

namespace {

int brute_force_token_edges(const WeightedGraph& G, int k) {
    std::vector<std::uint64_t> sets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << G.n()); ++s)
        if (std::popcount(s) == k) sets.push_back(s);
    int count = 0;
    for (std::size_t x = 0; x < sets.size(); ++x)
        for (std::size_t y = x + 1; y < sets.size(); ++y) {
            const std::uint64_t d = sets[x] ^ sets[y];
            if (std::popcount(d) != 2) continue;
            for (const auto& e : G.edges())
                if (d == ((std::uint64_t{1} << e.i) | (std::uint64_t{1} << e.j))) ++count;
        }
    return count;
}

}  // namespace

TEST_SUITE("token_gadget") {
    TEST_CASE("token graphs") {
        const auto kb = WeightedGraph::complete_bipartite(3, 2);
        const auto t0 = token_graph(kb, 0);
        CHECK(t0.vertices.size() == 1);
        CHECK(t0.edges.empty());
        const auto t1 = token_graph(kb, 1);
        CHECK(t1.vertices.size() == 5);
        CHECK(t1.edges.size() == kb.edges().size());
        const auto t2 = token_graph(kb, 2);
        CHECK(t2.vertices.size() == 10);
        CHECK(static_cast<int>(t2.edges.size()) == brute_force_token_edges(kb, 2));
        const Eigen::MatrixXd A = t2.adjacency();
        for (std::size_t v = 0; v < t2.vertices.size(); ++v) CHECK(A.row(v).sum() == t2.degree[v]);
        CHECK_THROWS_AS(token_graph(WeightedGraph(2, {{0, 1, 2.0}}), 1), DomainError);
        CHECK_THROWS_AS(token_graph(kb, 6), DomainError);
    }

    TEST_CASE("token spectrum equals the qubit Hamiltonian spectrum") {
        CHECK(token_spectrum_check(2, 4).ok());
        CHECK(token_spectrum_check(3, 4).ok());
        CHECK(token_spectrum_check(3, 10).ok());
    }

    TEST_CASE("symmetrized matrix") {
        const Tridiagonal T = symmetrized_matrix(3, 2, 4);
        REQUIRE(T.size() == 3);
        CHECK(T.d(0) == Approx(24));
        CHECK(T.d(1) == Approx(12));
        CHECK(T.d(2) == Approx(16));
        CHECK(T.e(0) == Approx(std::sqrt(6.0)));
        CHECK(T.e(1) == Approx(2 * std::sqrt(2.0)));
        const Tridiagonal Z = symmetrized_matrix(3, 0, 4);
        CHECK(Z.size() == 1);
        CHECK(Z.d(0) == 0);

        // top eigenvalue equals that of a D + A on the token graph T_{L-1}(K_{L,L-1})
        for (int L : {3, 4}) {
            const double a = 4;
            const auto tg = token_graph(WeightedGraph::complete_bipartite(L, L - 1), L - 1);
            Eigen::MatrixXd M = tg.adjacency();
            for (std::size_t v = 0; v < tg.vertices.size(); ++v) M(v, v) += a * tg.degree[v];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
            const Eigen::VectorXd tri = tridiagonal_eigenvalues(symmetrized_matrix(L, L - 1, a));
            CHECK(tri(tri.size() - 1) == Approx(es.eigenvalues()(es.eigenvalues().size() - 1)).epsilon(1e-10));
        }
    }

    TEST_CASE("bipartite gadget coefficients") {
        const auto r3 = bipartite_gadget_coeffs(3, 4);
        CHECK(r3.tZ <= -1.0 / 9);
        CHECK(r3.tX == Approx(r3.tY));
        CHECK((r3.alpha.array() > 0).all());
        for (int L : {5, 7}) {
            const double a = 4;
            const auto r = bipartite_gadget_coeffs(L, a);
            CHECK(r.tX >= std::pow(1 / (3 * a), L));
            CHECK(r.tX <= std::pow(2 / a, L));
            CHECK(r.gL >= a / 81 * std::pow(a / 2, L));
            CHECK(r.gap > 0);
        }
        const auto mx = bipartite_gadget_coeffs(5, 4, Picture::Maximization);
        const auto mn = bipartite_gadget_coeffs(5, 4, Picture::Minimization);
        CHECK(mn.tX == Approx(mx.tX));
        CHECK(mn.tZ == Approx(mx.tZ));
        CHECK_THROWS_AS(bipartite_gadget_coeffs(4, 4), DomainError);
        CHECK_THROWS_AS(bipartite_gadget_coeffs(5, 3), DomainError);
    }

    TEST_CASE("spectral and eigenvector bounds") {
        CHECK(spectral_bounds_check(5, 4).ok());
        CHECK(spectral_bounds_check(7, 4).ok());
        CHECK(spectral_bounds_check(5, 10).ok());
        CHECK(alpha0_bound_check(5, 4).ok());
        CHECK(alpha0_bound_check(9, 4).ok());
        CHECK(alpha0_bound_check(5, 100).ok());
        const auto r = bipartite_gadget_coeffs(5, 100);
        CHECK(r.alpha(0) / r.alpha.norm() > 0.99);
    }

    TEST_CASE("cross-check with the vertex gadget at L=3") {
        CHECK(token_vertex_crosscheck(4).ok());
        CHECK(token_vertex_crosscheck(10).ok());
    }
}

#include "doctest.h"

#include "hamlab/errors.hpp"
#include "hamlab/xy_chain.hpp"

using namespace hamlab;
using doctest::Approx;

TEST_SUITE("xy_chain") {
    TEST_CASE("spec validation") {
        CHECK_THROWS_AS(ChainSpec(4, 2), DomainError);
        CHECK_THROWS_AS(ChainSpec(1, 2), DomainError);
        CHECK_THROWS_AS(ChainSpec(3, 1), DomainError);
        const ChainSpec s(3, 2);
        CHECK(s.m() == 2);
        CHECK(s.r() == -2);
        CHECK(s.gamma() == Approx(3));
    }

    TEST_CASE("closed forms at L=3, a=2") {
        const auto sol = solve_chain(ChainSpec(3, 2));
        CHECK(sol.V_1q * sol.V_1q == Approx(0.8));
        CHECK(sol.U_1q / sol.V_1q == Approx(-0.5));
        CHECK(sol.effective_yy_ratio == Approx(-0.125));
    }

    TEST_CASE("singular value structure") {
        for (auto [L, a] : {std::pair{3, 2.0}, {5, 2.0}, {7, 3.0}, {9, 1.5}, {21, 2.0}}) {
            const auto sol = solve_chain(ChainSpec(L, a));
            REQUIRE(sol.singular_values.size() == L);
            int zeros = 0;
            for (int i = 0; i < L; ++i) zeros += std::abs(sol.singular_values(i)) <= 1e-9;
            CHECK(zeros == 1);
            const double g = std::abs(ChainSpec(L, a).gamma());
            CHECK(sol.singular_values(1) >= 2 - 1e-9);
            CHECK(sol.singular_values(L - 1) <= 2 * g + 1e-9);
            CHECK(sol.zero_mode.norm() == Approx(1));
        }
        CHECK(solve_chain(ChainSpec(5, 2)).singular_values(1) >= 2);
    }

    TEST_CASE("effective terms") {
        CHECK(chain_effective_term(ChainSpec(3, 2)) == PauliTerm{1, -0.125, 0});
        const auto t = chain_effective_term(ChainSpec(3, 10));
        CHECK(t.a == 1);
        CHECK(t.b == Approx(-1e-3));
        CHECK(t.c == 0);
        const auto x = chain_effective_term_interchanged(ChainSpec(3, 2));
        CHECK(x == PauliTerm{8, 0, -1});
        // L ~ c log2 n, rounded up to odd: |YY| <= n^-c
        for (int n : {10, 100, 1000})
            for (int c : {1, 2}) {
                int L = static_cast<int>(std::ceil(c * std::log2(n)));
                if (L % 2 == 0) ++L;
                if (L < 3) L = 3;
                CHECK(std::abs(chain_effective_term(ChainSpec(L, 2)).b) <= std::pow(n, -c));
            }
    }

    TEST_CASE("exact diagonalization cross-check") {
        CHECK(crosscheck_chain(ChainSpec(3, 2)).ok());
        CHECK(crosscheck_chain(ChainSpec(5, 2)).ok());
        CHECK(crosscheck_chain(ChainSpec(7, 3)).ok());
        CHECK_THROWS_AS(crosscheck_chain(ChainSpec(15, 2)), DomainError);
    }
}

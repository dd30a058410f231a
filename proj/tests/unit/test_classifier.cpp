#include <random>
#include <set>

#include "doctest.h"

#include "hamlab/classifier.hpp"
#include "hamlab/errors.hpp"

using namespace hamlab;
using doctest::Approx;

TEST_SUITE("classifier") {
    TEST_CASE("classify examples") {
        CHECK(classify({1, 1, 1}).phase == Phase::QMA_COMPLETE);
        CHECK(classify({1, 1, 0}).phase == Phase::NP_COMPLETE);
        CHECK(classify({1, 0, -1}).phase == Phase::EPRSTAR_REDUCIBLE);
        CHECK_THROWS_AS(classify({0, 1, 2}), DomainError);
    }

    TEST_CASE("toy model") {
        CHECK(classify_toy(-2).phase == Phase::EPRSTAR_REDUCIBLE);
        CHECK(classify_toy(0.5).phase == Phase::STOQMA_COMPLETE);
        CHECK(classify_toy(1).phase == Phase::NP_COMPLETE);
        CHECK(classify_toy(2).phase == Phase::QMA_COMPLETE);
        for (int i = 0; i <= 1000; ++i) {
            const double s = -2 + 4.0 * i / 1000;
            CHECK(classify(toy_term(s)).phase == classify_toy(s).phase);
        }
    }

    TEST_CASE("phases on the (a, b, -1) plane") {
        for (int i = 0; i <= 40; ++i)
            for (int j = 1; j < 40; ++j) {
                const double a = -1 + 4.0 * i / 40, b = -1 + 2.0 * j / 40;
                if (!(a > b)) continue;
                const auto bell = canonical_bell(pauli_to_bell({a, b, -1}).bell);
                const Phase p = classify(bell).phase;
                CHECK(p == (a > 1 ? Phase::STOQMA_COMPLETE : Phase::EPRSTAR_REDUCIBLE));
            }
    }

    TEST_CASE("EPR* decomposition") {
        const auto d = epr_star_decompose(0.5, 0.25);
        CHECK(d.b == Approx(0.5));
        CHECK(d.p3 == Approx(0.25));
        CHECK(d.p1 == Approx(5.0 / 9));
        CHECK(d.p2 == Approx(0.75 - 5.0 / 9));
        const auto e = epr_star_decompose(0, -1);
        CHECK(e.b == -1);
        CHECK(e.p1 == 0);
        CHECK(e.p2 == Approx(0.5));
        CHECK(e.p3 == Approx(0.5));
        const auto er = e.reconstruct();
        CHECK(er.a == Approx(0).scale(1));
        CHECK(er.b == Approx(-1));
        CHECK(er.c == Approx(-1));
        const auto f = epr_star_decompose(1, 1);
        CHECK(f.b == 1);
        CHECK(f.p1 == 1);
        CHECK(f.p2 == 0);
        CHECK(f.p3 == 0);
        CHECK_THROWS_AS(epr_star_decompose(0, 0.5), DomainError);

        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> U(-1, 1);
        for (int i = 0; i < 10000; ++i) {
            double ap = U(rng), bp = U(rng);
            if (bp > ap) std::swap(ap, bp);
            const auto x = epr_star_decompose(ap, bp);
            CHECK(x.p1 >= -1e-12);
            CHECK(x.p2 >= -1e-12);
            CHECK(x.p3 >= -1e-12);
            CHECK(x.p1 + x.p2 + x.p3 == Approx(1));
            CHECK(x.b >= -1);
            CHECK(x.b <= 1);
            const auto r = x.reconstruct();
            CHECK(std::abs(r.a - ap) <= 1e-9);
            CHECK(std::abs(r.b - bp) <= 1e-9);
            CHECK(std::abs(r.c + 1) <= 1e-12);
        }
    }

    TEST_CASE("arrangements") {
        const auto all = enumerate_arrangements();
        CHECK(all.size() == 20);
        CHECK(arrangement_count_formula(0) + arrangement_count_formula(1) + arrangement_count_formula(2) +
                  arrangement_count_formula(3) ==
              20);
        CHECK(arrangement_count_formula(2) == 5);
        std::set<std::string> codes;
        int fully_degenerate = 0;
        for (const auto& a : all) {
            codes.insert(a.encode());
            CHECK(Arrangement::decode(a.encode()) == a);
            fully_degenerate += a.encode() == "STTT";
        }
        CHECK(codes.size() == 20);
        CHECK(fully_degenerate == 1);
        CHECK(enumerate_arrangements() == all);
        CHECK_THROWS_AS(Arrangement::decode("S<T"), DomainError);
    }

    TEST_CASE("singlet flow DAG") {
        const FlowDag dag = singlet_flow_dag();
        CHECK(dag.nodes.size() == 20);
        // QMA exactly when the singlet is alone in the lowest group
        int qma = 0, oracle = 0;
        for (std::size_t i = 0; i < dag.nodes.size(); ++i) {
            qma += dag.labels[i].figure_phase() == Phase::QMA_COMPLETE;
            oracle += dag.nodes[i].groups.front() == "S";
        }
        CHECK(oracle == 4);
        CHECK(qma == oracle);
        const int maxcut = dag.index_of(kMaxCutArrangement);
        const int epr = dag.index_of(kEprArrangement);
        REQUIRE(maxcut >= 0);
        REQUIRE(epr >= 0);
        CHECK(dag.labels[maxcut].phase == Phase::NP_COMPLETE);
        bool into_stoq = false;
        for (auto [from, to] : dag.edges)
            if (from == maxcut && dag.labels[to].figure_phase() == Phase::STOQMA_COMPLETE) into_stoq = true;
        CHECK(into_stoq);
        CHECK(!dag.path_from_phase(Phase::P_TRIVIAL, epr).empty());
        CHECK(dag.has_path(dag.index_of("STTT"), epr));
        CHECK(dag.has_edge(dag.index_of("STTT"), epr));
        CHECK(dag.has_edge(maxcut, dag.index_of("ST<T<T")));
    }
}

#include <sstream>

#include "doctest.h"

#include "hamlab/errors.hpp"
#include "hamlab/io.hpp"

using namespace hamlab;
using doctest::Approx;

TEST_SUITE("io") {
    TEST_CASE("graph round trip") {
        const WeightedGraph g(4, {{0, 1, 1.0}, {1, 3, 0.25}, {2, 3, 3.5}});
        const auto back = io::graph_from_json(io::to_json(g));
        CHECK(back.n() == 4);
        REQUIRE(back.edges().size() == 3);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(back.edges()[k].i == g.edges()[k].i);
            CHECK(back.edges()[k].j == g.edges()[k].j);
            CHECK(back.edges()[k].w == g.edges()[k].w);
        }
        const auto d = io::graph_from_json(io::json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2, 2.0]]})"));
        CHECK(d.edges()[0].w == 1);
        CHECK(d.edges()[1].w == 2);
    }

    TEST_CASE("graph specs") {
        CHECK(io::parse_graph("path:5").edges().size() == 4);
        CHECK(io::parse_graph("bipartite:3").n() == 5);
        CHECK(io::parse_graph("five-node").n() == 5);
        CHECK_THROWS(io::parse_graph("path:x"));
        CHECK_THROWS(io::parse_graph("/nonexistent/graph.json"));
    }

    TEST_CASE("number formatting round-trips") {
        for (double x : {0.1, 1.0 / 3, -2.5e-17, 555.217992, 1e300}) CHECK(std::stod(io::num(x)) == x);
        CHECK(io::num(2) == "2");
    }

    TEST_CASE("term serialization") {
        const auto j = io::to_json(PauliTerm{1, 0.5, -1});
        CHECK(j["a"] == 1);
        CHECK(j["b"] == 0.5);
        CHECK(j["c"] == -1);
        const auto k = io::to_json(BellTerm{4, 4, 4});
        CHECK(k["alpha"] == 4);
    }

    TEST_CASE("flow CSV schema") {
        std::ostringstream os;
        io::write_flow_csv(os, {{2, 0.5, 3, -0.1, true, ""}, {1, 1, 0, 0, false, "degenerate"}});
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        CHECK(line == "a,b,a_prime,b_prime,valid");
        std::getline(is, line);
        CHECK(line == "2,0.5,3,-0.1,1");
        std::getline(is, line);
        CHECK(line.substr(line.size() - 1) == "0");

        std::ostringstream ts;
        io::write_trajectory_csv(ts, {{2, -0.5}, {6.5, 0.2}});
        CHECK(ts.str().rfind("step,a,b\n0,2,-0.5\n", 0) == 0);
    }
}

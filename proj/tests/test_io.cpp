#include <doctest.h>

#include <sstream>

#include "shadowchi/cayley.hpp"
#include "shadowchi/errors.hpp"
#include "shadowchi/graph_io.hpp"
#include "test_support.hpp"

using namespace shadowchi;
using nlohmann::json;

TEST_CASE("JSON round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = testing::random_graph(15, 0.3, seed);
        auto back = graph_from_json(graph_to_json(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
    auto c = cayley_window(MarkedGroupSpec::gamma(3), 0, 2);
    auto back = graph_from_json(graph_to_json(c));
    CHECK(back.element_labels() == c.element_labels());
}

TEST_CASE("DIMACS round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = testing::random_graph(12, 0.4, 50 + seed);
        std::stringstream s;
        write_dimacs(s, g);
        auto back = read_dimacs(s);
        CHECK(back.edges() == g.edges());
        CHECK(back.vertex_count() == g.vertex_count());
    }
    auto q = cayley_quotient(MarkedGroupSpec::delta(3), 3);
    std::stringstream s;
    write_dimacs(s, q);
    CHECK(s.str().rfind("p edge 27 162\n", 0) == 0);
}

TEST_CASE("format detection and errors") {
    CHECK(parse_graph(R"({"vertices": 2, "edges": [[0, 1]]})").edge_count() == 1);
    CHECK(parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n").edge_count() == 2);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1])"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 5]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0, 1, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nx 1 2\n"), InputError);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), InputError);
}

TEST_CASE("instance and tower documents") {
    auto inst = ladder_line(6, LineMode::Cycle);
    auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.mode() == LineMode::Cycle);
    CHECK(back.blocks() == inst.blocks());
    CHECK(back.chi() == inst.chi());
    CHECK(back.graph().edges() == inst.graph().edges());
    json missing = instance_to_json(inst);
    missing["blocks"] = json::array({json::array({0, 1})});
    CHECK_THROWS_AS(instance_from_json(missing), InputError);

    AnchoredTower t;
    t.k = 4;
    t.extent = 30;
    t.mode = LineMode::Cycle;
    t.anchors = {{0, 1, 2}, {15, 3, 0}};
    auto tb = tower_from_json(tower_to_json(t));
    CHECK(tb.k == 4);
    CHECK(tb.extent == 30);
    CHECK(tb.mode == LineMode::Cycle);
    REQUIRE(tb.anchors.size() == 2);
    CHECK(tb.anchors[1].position == 15);
    CHECK(tb.anchors[1].a0 == 3);
    CHECK(tb.anchors[0].b0 == 2);
    CHECK_THROWS_AS(tower_from_json(json{{"extent", 3}}), InputError);
}

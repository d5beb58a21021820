#include <catch2/catch_amalgamated.hpp>

#include "rsnd/json_io.hpp"
#include "support/fixtures.hpp"

using namespace rsnd;

TEST_CASE("instance round trip") {
    Instance inst;
    inst.graph = Multigraph(3);
    inst.graph.add_edge(0, 1, Rational(1, 3));
    inst.graph.add_edge(1, 2, 7);
    inst.demands = {{0, 2, 2}};
    auto j = instance_to_json(inst);
    auto back = instance_from_json(j);
    REQUIRE(back.graph.node_count() == 3);
    REQUIRE(back.graph.edge_count() == 2);
    REQUIRE(back.graph.edge(0).w == Rational(1, 3));
    REQUIRE(back.graph.edge(1).w == 7);
    REQUIRE(back.demands.size() == 1);
    REQUIRE(back.demands[0].s == 0);
    REQUIRE(back.demands[0].t == 2);
    REQUIRE(back.demands[0].k == 2);
    REQUIRE(j["edges"][0]["w"] == "1/3");  // non-integral weights serialize as strings
    REQUIRE(j["edges"][1]["w"] == 7);
}

TEST_CASE("instance parsing accepts rational forms") {
    auto j = parse_json_text(R"({"n": 2, "edges": [{"u": 0, "v": 1, "w": "4/2"}], "demands": []})");
    auto inst = instance_from_json(j);
    REQUIRE(inst.graph.edge(0).w == 2);
    REQUIRE(instance_to_json(inst)["edges"][0]["w"] == 2);
}

TEST_CASE("malformed instances raise parse errors") {
    REQUIRE_THROWS_AS(parse_json_text("{"), parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text("[]")), parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(R"({"n": 2})")), parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(R"({"n": 2, "edges": 3, "demands": []})")),
                      parse_error);
    REQUIRE_THROWS_AS(
        instance_from_json(parse_json_text(R"({"n": 2, "edges": [{"u": 0, "v": 1}], "demands": []})")),
        parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 1, "w": "x"}], "demands": []})")),
                      parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 1, "w": "1/0"}], "demands": []})")),
                      parse_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 1, "w": 1.5}], "demands": []})")),
                      parse_error);
}

TEST_CASE("impossible instances raise structural errors") {
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 0, "w": 1}], "demands": []})")),
                      structural_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 5, "w": 1}], "demands": []})")),
                      structural_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [{"u": 0, "v": 1, "w": -2}], "demands": []})")),
                      structural_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [], "demands": [{"s": 1, "t": 1, "k": 1}]})")),
                      structural_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": 2, "edges": [], "demands": [{"s": 0, "t": 1, "k": 0}]})")),
                      structural_error);
    REQUIRE_THROWS_AS(instance_from_json(parse_json_text(
                          R"({"n": -1, "edges": [], "demands": []})")),
                      structural_error);
}

TEST_CASE("solution round trip computes costs") {
    auto g = fixtures::k4();
    auto j = solution_to_json(g, {0, 2, 5}, {{"rounds", 2}});
    REQUIRE(j["cost"] == "3");  // costs always serialize as strings
    REQUIRE(j["trace"]["rounds"] == 2);
    auto sol = solution_from_json(j);
    REQUIRE(sol.edges == EdgeSet{0, 2, 5});
    REQUIRE(sol.cost.has_value());
    REQUIRE(*sol.cost == 3);
    REQUIRE(sol.trace["rounds"] == 2);

    auto bare = solution_from_json(parse_json_text(R"({"edges": []})"));
    REQUIRE(bare.edges.empty());
    REQUIRE(!bare.cost.has_value());
    auto numeric = solution_from_json(parse_json_text(R"({"edges": [1], "cost": 1})"));
    REQUIRE(*numeric.cost == 1);
    REQUIRE_THROWS_AS(solution_from_json(parse_json_text(R"({"edges": ["a"]})")), parse_error);
    REQUIRE_THROWS_AS(solution_from_json(parse_json_text(R"({"edges": 1})")), parse_error);
}

TEST_CASE("fractional solution costs serialize as strings") {
    Multigraph g(2);
    g.add_edge(0, 1, Rational(3, 7));
    auto j = solution_to_json(g, {0});
    REQUIRE(j["cost"] == "3/7");
    auto sol = solution_from_json(j);
    REQUIRE(*sol.cost == Rational(3, 7));
}

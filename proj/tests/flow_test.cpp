#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rsnd/flow.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace rsnd;

TEST_CASE("max flow on k4") {
    auto g = fixtures::k4();
    auto res = max_flow_min_cut(g, unit_capacities(g), {0}, {3});
    REQUIRE(res.value == 3);
    REQUIRE(!res.limited);
    REQUIRE(res.source_side == NodeSet{0});
    REQUIRE(res.min_cut == EdgeSet{0, 1, 2});
}

TEST_CASE("max flow across the two block join") {
    auto g = fixtures::two_blocks();
    auto res = max_flow_min_cut(g, unit_capacities(g), {0}, {7});
    REQUIRE(res.value == 2);
    REQUIRE(res.source_side == NodeSet{0, 1, 2, 3});
    REQUIRE(res.min_cut == EdgeSet{12, 13});
}

TEST_CASE("rational capacities") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::map<int, Rational> caps{{0, Rational(1, 2)}, {1, Rational(1, 3)}, {2, Rational(2)}};
    auto res = max_flow_min_cut(g, caps, {0}, {2});
    REQUIRE(res.value == Rational(5, 6));
    REQUIRE(res.source_side == NodeSet{0});
    REQUIRE(res.min_cut == EdgeSet{0, 1});
    REQUIRE(res.flow_per_edge.at(0) == Rational(1, 2));
    REQUIRE(res.flow_per_edge.at(1) == Rational(1, 3));
}

TEST_CASE("flow limit stops early") {
    auto g = fixtures::k4();
    auto res = max_flow_min_cut(g, unit_capacities(g), {0}, {3}, Rational(2));
    REQUIRE(res.limited);
    REQUIRE(res.value == 2);
    auto full = max_flow_min_cut(g, unit_capacities(g), {0}, {3}, Rational(5));
    REQUIRE(!full.limited);
    REQUIRE(full.value == 3);
}

TEST_CASE("flow rejects bad input") {
    auto g = fixtures::k4();
    REQUIRE_THROWS_AS(max_flow_min_cut(g, unit_capacities(g), {0}, {0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(max_flow_min_cut(g, unit_capacities(g), {}, {3}), std::invalid_argument);
    REQUIRE_THROWS_AS(max_flow_min_cut(g, {{0, Rational(1)}}, {0}, {3}), std::invalid_argument);
}

TEST_CASE("capped cardinality min cut") {
    auto g = fixtures::two_blocks();
    REQUIRE(capped_cardinality_min_cut(g, 0, 7, 4) == 2);
    REQUIRE(capped_cardinality_min_cut(g, 0, 1, 2) == 2);  // capped below the true 3
    Multigraph h(3);
    h.add_edge(0, 1);
    REQUIRE(capped_cardinality_min_cut(h, 0, 2, 3) == 0);
}

TEST_CASE("min cut matches exhaustive search on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 65) g.add_edge(u, v, brute::random_unit_rational(rng));
        int s = 0;
        int t = n - 1;
        auto caps = weight_costs(g);  // capacities = weights here
        auto res = max_flow_min_cut(g, caps, {s}, {t});
        Rational best(-1);
        for (const auto& side : brute::all_sides(n)) {
            if (!side.count(s) || side.count(t)) continue;
            Rational c(0);
            for (int id : cut_edges(g, side)) c += caps.at(id);
            if (best < 0 || c < best) best = c;
        }
        REQUIRE(res.value == best);
        Rational across(0);
        for (int id : res.min_cut) across += caps.at(id);
        REQUIRE(across == best);
        REQUIRE(res.source_side.count(s) == 1);
        REQUIRE(res.source_side.count(t) == 0);
    }
}

TEST_CASE("closest min cut side is contained in every other minimum side") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 70) g.add_edge(u, v);
        if (capped_cardinality_min_cut(g, 0, n - 1, g.edge_count() + 1) == 0) continue;
        auto res = max_flow_min_cut(g, unit_capacities(g), {0}, {n - 1});
        auto family = brute::min_cut_sides(g, NodeSet{0}, n - 1);
        REQUIRE(Rational(family.value) == res.value);
        for (const auto& side : family.sides)
            for (int v : res.source_side) REQUIRE(side.count(v) == 1);
    }
}

TEST_CASE("min cost flow on k4") {
    auto g = fixtures::k4();
    auto res = min_cost_flow(g, weight_costs(g), unit_int_capacities(g), 0, 3, 3);
    REQUIRE(res.amount == 3);
    REQUIRE(res.cost == 5);
    REQUIRE(res.support == EdgeSet{0, 1, 2, 4, 5});
}

TEST_CASE("min cost flow prefers cheap paths") {
    Multigraph g(4);
    g.add_edge(0, 3, 10);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 3, 1);
    g.add_edge(0, 2, 1);
    g.add_edge(2, 3, 1);
    auto costs = weight_costs(g);
    auto caps = unit_int_capacities(g);
    REQUIRE(min_cost_flow(g, costs, caps, 0, 3, 1).cost == 2);
    REQUIRE(min_cost_flow(g, costs, caps, 0, 3, 2).cost == 4);
    REQUIRE(min_cost_flow(g, costs, caps, 0, 3, 3).cost == 14);
}

TEST_CASE("min cost flow reports shortfall") {
    auto g = fixtures::path4();
    auto costs = weight_costs(g);
    auto caps = unit_int_capacities(g);
    REQUIRE_THROWS_AS(min_cost_flow(g, costs, caps, 0, 3, 2), infeasible_error);
    REQUIRE_THROWS_WITH(min_cost_flow(g, costs, caps, 0, 3, 2),
                        Catch::Matchers::ContainsSubstring("maximum is 1"));
}

TEST_CASE("min cost flow support matches exhaustive cheapest support") {
    std::mt19937_64 rng(13);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 60) g.add_edge(u, v, Rational(1 + static_cast<int>(rng() % 4)));
        if (g.edge_count() > 12) continue;
        int q = 2 + static_cast<int>(rng() % 2);
        auto want = brute::flow_support_opt(g, 0, n - 1, q);
        if (!want) {
            REQUIRE_THROWS_AS(min_cost_flow(g, weight_costs(g), unit_int_capacities(g), 0, n - 1, q),
                              infeasible_error);
            continue;
        }
        auto res = min_cost_flow(g, weight_costs(g), unit_int_capacities(g), 0, n - 1, q);
        REQUIRE(res.cost == *want);
        REQUIRE(g.total_weight(res.support) == *want);
        ++done;
    }
    REQUIRE(done >= 30);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rsnd/chain.hpp"
#include "rsnd/verify.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace rsnd;

TEST_CASE("closest two edge separator") {
    auto g = fixtures::two_blocks();
    auto sep = closest_important_separator_2(g, {0}, 7);
    REQUIRE(sep.has_value());
    REQUIRE(sep->edges == EdgeSet{12, 13});
    REQUIRE(sep->source_side == NodeSet{0, 1, 2, 3});

    REQUIRE(!closest_important_separator_2(fixtures::k4(), {0}, 3).has_value());
    REQUIRE_THROWS_AS(closest_important_separator_2(fixtures::path4(), {0}, 3), structural_error);
}

TEST_CASE("closest separator is the minimal minimum cut") {
    std::mt19937_64 rng(71);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 55) g.add_edge(u, v);
        auto family = brute::min_cut_sides(g, {0}, n - 1);
        if (family.value <= 1) {
            REQUIRE_THROWS_AS(closest_important_separator_2(g, {0}, n - 1), structural_error);
            continue;
        }
        auto sep = closest_important_separator_2(g, {0}, n - 1);
        if (family.value >= 3) {
            REQUIRE(!sep.has_value());
            continue;
        }
        ++found;
        REQUIRE(sep.has_value());
        REQUIRE(sep->edges.size() == 2);
        REQUIRE(cut_edges(g, sep->source_side) == sep->edges);
        for (const auto& side : family.sides)
            for (int v : sep->source_side) REQUIRE(side.count(v) == 1);
    }
    REQUIRE(found >= 8);
}

TEST_CASE("chain of the two block graph") {
    auto g = fixtures::two_blocks();
    auto chain = build_chain(g, 0, 7);
    REQUIRE(chain.regions == std::vector<NodeSet>{{0, 1, 2, 3}, {4, 5, 6, 7}});
    REQUIRE(chain.separators == std::vector<EdgeSet>{{12, 13}});
    REQUIRE(chain.left_boundary == std::vector<NodeSet>{{0}, {4, 5}});
    REQUIRE(chain.right_boundary == std::vector<NodeSet>{{2, 3}, {7}});
}

TEST_CASE("chain of the triangle chain") {
    auto g = fixtures::two_triangles_chain();
    auto chain = build_chain(g, 0, 5);
    REQUIRE(chain.regions == std::vector<NodeSet>{{0}, {1, 2}, {3, 4}, {5}});
    REQUIRE(chain.separators == std::vector<EdgeSet>{{0, 1}, {6, 7}, {4, 5}});
    REQUIRE(chain.left_boundary == std::vector<NodeSet>{{0}, {1, 2}, {3, 4}, {5}});
    REQUIRE(chain.right_boundary == std::vector<NodeSet>{{0}, {1, 2}, {3, 4}, {5}});
}

TEST_CASE("chain without separators is one region") {
    auto chain = build_chain(fixtures::k4(), 0, 3);
    REQUIRE(chain.regions == std::vector<NodeSet>{{0, 1, 2, 3}});
    REQUIRE(chain.separators.empty());
    REQUIRE(chain.left_boundary == std::vector<NodeSet>{{0}});
    REQUIRE(chain.right_boundary == std::vector<NodeSet>{{3}});
}

TEST_CASE("chain stops when the target joins the frontier") {
    auto g = fixtures::two_blocks();
    auto chain = build_chain(g, 0, 4);
    REQUIRE(chain.regions.size() == 2);
    REQUIRE(chain.left_boundary[1] == NodeSet{4, 5});
    REQUIRE(chain.right_boundary[1] == NodeSet{4});
    REQUIRE(!check_structure(g, fixtures::all_ids(g), 0, 4).has_value());
}

TEST_CASE("chain rejects degenerate input") {
    REQUIRE_THROWS_AS(build_chain(fixtures::k4(), 2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(build_chain(fixtures::path4(), 0, 3), structural_error);
}

TEST_CASE("chain invariants on planted instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenSpec spec;
        spec.n = 6 + static_cast<int>(seed % 4);
        spec.edge_percent = 50;
        spec.kind = GenSpec::DemandKind::single_pair;
        spec.k = 3;
        spec.seed = seed;
        spec.plant_two_cut = true;
        auto inst = gen_random(spec);
        int s = inst.demands[0].s, t = inst.demands[0].t;
        auto chain = build_chain(inst.graph, s, t);
        REQUIRE(chain.regions.size() == chain.separators.size() + 1);
        REQUIRE(chain.regions.size() >= 2);  // the planted cut separates s from t

        NodeSet prefix, all;
        for (std::size_t i = 0; i < chain.regions.size(); ++i) {
            for (int v : chain.regions[i]) {
                REQUIRE(all.count(v) == 0);  // regions partition the nodes
                all.insert(v);
                prefix.insert(v);
            }
            if (i < chain.separators.size())
                REQUIRE(cut_edges(inst.graph, prefix) == chain.separators[i]);

            Subgraph sub = induced_subgraph(inst.graph, chain.regions[i]);
            REQUIRE(connected_components(sub.graph).size() == 1);
            NodeSet lb, rb;
            for (int v : chain.left_boundary[i]) lb.insert(sub.node_map.at(v));
            for (int v : chain.right_boundary[i]) rb.insert(sub.node_map.at(v));
            bool disjoint = true;
            for (int v : lb)
                if (rb.count(v)) disjoint = false;
            if (disjoint) {
                auto flow = max_flow_min_cut(sub.graph, unit_capacities(sub.graph), lb, rb);
                REQUIRE(flow.value >= 3);
            }
        }
        REQUIRE(static_cast<int>(all.size()) == inst.graph.node_count());

        // left boundary of each later region = far endpoints of the previous separator
        for (std::size_t i = 0; i + 1 < chain.regions.size(); ++i) {
            NodeSet far;
            for (int id : chain.separators[i]) {
                const Edge& e = inst.graph.edge(id);
                far.insert(chain.regions[i].count(e.u) ? e.v : e.u);
            }
            REQUIRE(chain.left_boundary[i + 1] == far);
        }
    }
}

TEST_CASE("structure check on the complete graph") {
    auto g = fixtures::k4();
    REQUIRE(!check_structure(g, {0, 1, 2, 4, 5}, 0, 3).has_value());
    auto v = check_structure(g, {0, 1, 4, 5}, 0, 3);
    REQUIRE(v.has_value());
    REQUIRE(v->condition == "three-flow");
    REQUIRE(v->region == 0);
}

TEST_CASE("structure check requires the separators") {
    auto g = fixtures::two_blocks();
    REQUIRE(!check_structure(g, fixtures::all_ids(g), 0, 7).has_value());
    EdgeSet h = fixtures::all_ids(g);
    h.erase(12);
    auto v = check_structure(g, h, 0, 7);
    REQUIRE(v.has_value());
    REQUIRE(v->condition == "separator edge missing");
    REQUIRE_THROWS_AS(check_structure(g, {99}, 0, 7), std::invalid_argument);
}

TEST_CASE("structure check agrees with fault enumeration") {
    std::mt19937_64 rng(72);
    int agree_feasible = 0, agree_infeasible = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenSpec spec;
        spec.n = 6 + static_cast<int>(seed % 3);
        spec.edge_percent = 45;
        spec.kind = GenSpec::DemandKind::single_pair;
        spec.k = 3;
        spec.seed = seed;
        spec.plant_two_cut = true;
        auto inst = gen_random(spec);
        const auto& g = inst.graph;
        int s = inst.demands[0].s, t = inst.demands[0].t;

        std::vector<EdgeSet> candidates{fixtures::all_ids(g), exact_opt(g, inst.demands).edges};
        for (int percent : {50, 75}) {
            EdgeSet h;
            for (const auto& e : g.edges())
                if (rng() % 100 < static_cast<unsigned>(percent)) h.insert(e.id);
            candidates.push_back(std::move(h));
        }
        for (const auto& h : candidates) {
            bool structural = !check_structure(g, h, s, t).has_value();
            bool enumerated = !verify_rsnd(g, h, inst.demands).has_value();
            REQUIRE(structural == enumerated);
            (structural ? agree_feasible : agree_infeasible) += 1;
        }
    }
    REQUIRE(agree_feasible >= 10);
    REQUIRE(agree_infeasible >= 10);
}

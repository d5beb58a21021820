#pragma once

#include <utility>
#include <vector>

#include "rsnd/chain.hpp"
#include "rsnd/flow.hpp"
#include "rsnd/one_cut_reduction.hpp"
#include "rsnd/steiner_forest.hpp"

namespace rsnd {

// Single-demand (s, t, 3) solver. After reducing to 2-edge-connected
// components, each component is cut into a chain along its 2-edge
// separators; a region is then covered by four independent pieces whose
// union meets the structural feasibility conditions:
//   A. a minimum-cost three-flow between the contracted boundary sides
//      (exact, and vacuous when the sides share a node),
//   B. two single-fault subproblems, one per direction, on the graph with
//      one side contracted (factor 2 each),
//   C. a Steiner forest tying each connected boundary pair together
//      (at most four pairs, factor 7/4).
// With the separators (mandatory in any solution) that totals 27/4. A
// component with no 2-edge separator needs only piece A: any support of a
// three-flow keeps one path through every pair of faults by itself.

struct Rsnd3Trace {
    int components = 0;  // components that carry the demand
    int regions = 0;
    Rational separator_cost = 0;
    Rational flow_cost = 0;      // piece A
    Rational relative_cost = 0;  // piece B
    Rational steiner_cost = 0;   // piece C
};

namespace detail {

inline EdgeSet rsnd3_component(const Multigraph& g, int s, int t, Rsnd3Trace* trace) {
    ChainDecomposition chain = build_chain(g, s, t);
    if (trace) trace->regions += static_cast<int>(chain.regions.size());
    if (chain.separators.empty()) {
        auto mcf = min_cost_flow(g, weight_costs(g), unit_int_capacities(g), s, t, 3);
        if (trace) trace->flow_cost += mcf.cost;
        return mcf.support;
    }

    EdgeSet result;
    for (const auto& sep : chain.separators)
        for (int id : sep) {
            result.insert(id);
            if (trace) trace->separator_cost += g.edge(id).w;
        }

    for (std::size_t i = 0; i < chain.regions.size(); ++i) {
        Subgraph sub = induced_subgraph(g, chain.regions[i]);
        const Multigraph& gi = sub.graph;
        NodeSet lb, rb;
        for (int v : chain.left_boundary[i]) lb.insert(sub.node_map.at(v));
        for (int v : chain.right_boundary[i]) rb.insert(sub.node_map.at(v));
        bool disjoint = true;
        for (int v : lb)
            if (rb.count(v)) disjoint = false;

        if (disjoint) {
            Contraction c1 = contract(gi, lb);
            NodeSet rb_img;
            for (int v : rb) rb_img.insert(c1.node_map[static_cast<std::size_t>(v)]);
            Contraction c2 = contract(c1.graph, rb_img);
            int src = c2.node_map[static_cast<std::size_t>(c1.supernode)];
            auto mcf = min_cost_flow(c2.graph, weight_costs(c2.graph), unit_int_capacities(c2.graph), src,
                                     c2.supernode, 3);
            if (trace) trace->flow_cost += mcf.cost;
            result.insert(mcf.support.begin(), mcf.support.end());
        }

        for (const auto& [from, to] : {std::pair{lb, rb}, std::pair{rb, lb}}) {
            std::vector<int> targets;
            for (int y : to)
                if (!from.count(y)) targets.push_back(y);
            if (targets.empty()) continue;
            Contraction con = contract(gi, from);
            std::vector<Demand> local;
            for (int y : targets)
                local.push_back(Demand{con.supernode, con.node_map[static_cast<std::size_t>(y)], 2});
            EdgeSet part = rsnd2(con.graph, local);
            if (trace)
                for (int id : part) trace->relative_cost += g.edge(id).w;
            result.insert(part.begin(), part.end());
        }

        std::vector<std::pair<int, int>> pairs;
        {
            Dsu conn(gi.node_count());
            for (const auto& e : gi.edges()) conn.unite(e.u, e.v);
            for (int a : lb)
                for (int b : rb)
                    if (a != b && conn.find(a) == conn.find(b)) pairs.push_back({a, b});
        }
        if (!pairs.empty()) {
            EdgeSet part = steiner_forest(gi, pairs);
            if (trace)
                for (int id : part) trace->steiner_cost += g.edge(id).w;
            result.insert(part.begin(), part.end());
        }
    }
    return result;
}

}  // namespace detail

inline EdgeSet rsnd3_single(const Multigraph& g, const std::vector<Demand>& demands,
                            Rsnd3Trace* trace = nullptr) {
    if (demands.size() != 1 || demands[0].k != 3) throw structural_error("single demand k=3 required");
    return solve_via_components(g, demands, [&](const Multigraph& sub, const std::vector<Demand>& local) {
        if (local.size() != 1 || local[0].k != 3) throw internal_error("unexpected lifted demand shape");
        if (trace) ++trace->components;
        return detail::rsnd3_component(sub, local[0].s, local[0].t, trace);
    });
}

}  // namespace rsnd

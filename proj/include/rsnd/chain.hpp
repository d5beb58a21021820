#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsnd/flow.hpp"
#include "rsnd/multigraph.hpp"

namespace rsnd {

// Chain decomposition along 2-edge separators between s and t. Peeling the
// inclusion-minimal source side of the closest separator, then searching
// again from that separator's far endpoints, visits every 2-edge cut between
// s and t exactly once and orders them; the regions in between admit three
// edge-disjoint routes across. Every prefix of regions has exactly its
// separator as boundary, and only consecutive regions touch.

struct Separator2 {
    EdgeSet edges;
    NodeSet source_side;  // inclusion-minimal side containing the sources
};

// Closest 2-edge separator between node set x and target t, if any; none
// when three edge-disjoint paths exist. Fewer than two is an input error.
inline std::optional<Separator2> closest_important_separator_2(const Multigraph& g, const NodeSet& x, int t) {
    auto flow = max_flow_min_cut(g, unit_capacities(g), x, NodeSet{t}, Rational(3));
    if (flow.value <= 1)
        throw structural_error("fewer than two edge-disjoint paths between the boundary and the target");
    if (flow.value >= 3) return std::nullopt;
    return Separator2{flow.min_cut, flow.source_side};
}

struct ChainDecomposition {
    std::vector<NodeSet> regions;         // original node labels, source side first
    std::vector<EdgeSet> separators;      // separators[i] between regions[i] and regions[i+1]
    std::vector<NodeSet> left_boundary;   // per region: far endpoints of the previous separator; {s} first
    std::vector<NodeSet> right_boundary;  // per region: near endpoints of the next separator; {t} last
};

inline ChainDecomposition build_chain(const Multigraph& g, int s, int t) {
    g.check_node(s);
    g.check_node(t);
    if (s == t) throw std::invalid_argument("source and target coincide");
    ChainDecomposition chain;
    NodeSet alive;
    for (int v = 0; v < g.node_count(); ++v) alive.insert(v);
    NodeSet x{s};
    while (true) {
        if (x.count(t)) {
            chain.regions.push_back(alive);
            chain.left_boundary.push_back(x);
            chain.right_boundary.push_back(NodeSet{t});
            break;
        }
        Subgraph sub = induced_subgraph(g, alive);
        NodeSet xs;
        for (int v : x) xs.insert(sub.node_map.at(v));
        auto sep = closest_important_separator_2(sub.graph, xs, sub.node_map.at(t));
        if (!sep) {
            chain.regions.push_back(alive);
            chain.left_boundary.push_back(x);
            chain.right_boundary.push_back(NodeSet{t});
            break;
        }
        NodeSet side;
        for (int v : sep->source_side) side.insert(sub.to_original[static_cast<std::size_t>(v)]);
        NodeSet near, far;
        for (int id : sep->edges) {
            const Edge& e = g.edge(id);
            if (side.count(e.u)) {
                near.insert(e.u);
                far.insert(e.v);
            } else {
                near.insert(e.v);
                far.insert(e.u);
            }
        }
        chain.regions.push_back(side);
        chain.separators.push_back(sep->edges);
        chain.left_boundary.push_back(x);
        chain.right_boundary.push_back(near);
        x = far;
        for (int v : side) alive.erase(v);
    }
    return chain;
}

struct StructureViolation {
    int region = -1;
    std::string condition;
    std::string detail;
};

namespace detail {

// roots of the subgraph restricted to the given edge ids, minus one optional
// fault position
inline std::vector<int> roots_without(const Multigraph& g, const EdgeSet& keep, int fault_id) {
    Dsu dsu(g.node_count());
    for (const auto& e : g.edges()) {
        if (e.id == fault_id || !keep.count(e.id)) continue;
        dsu.unite(e.u, e.v);
    }
    std::vector<int> root(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) root[static_cast<std::size_t>(v)] = dsu.find(v);
    return root;
}

inline bool set_reaches(const std::vector<int>& root, const NodeSet& from, int to) {
    for (int u : from)
        if (root[static_cast<std::size_t>(u)] == root[static_cast<std::size_t>(to)]) return true;
    return false;
}

}  // namespace detail

// Feasibility of a candidate h for the single demand (s, t, 3), decided
// structurally instead of by fault enumeration: h must contain every chain
// separator, and inside each region (with local graph G_i and its h-edges
// H_i) it must
//  1. route three edge-disjoint paths between the contracted boundary sides
//     (vacuous when the sides share a node),
//  2. preserve single-fault reachability from either boundary side, taken as
//     a set, to each node of the opposite side,
//  3. keep every boundary pair that G_i connects connected.
inline std::optional<StructureViolation> check_structure(const Multigraph& g, const EdgeSet& h, int s,
                                                         int t) {
    for (int id : h) g.edge(id);
    ChainDecomposition chain = build_chain(g, s, t);
    for (std::size_t i = 0; i < chain.separators.size(); ++i)
        for (int id : chain.separators[i])
            if (!h.count(id))
                return StructureViolation{static_cast<int>(i), "separator edge missing",
                                          "edge " + std::to_string(id)};
    for (std::size_t i = 0; i < chain.regions.size(); ++i) {
        Subgraph sub = induced_subgraph(g, chain.regions[i]);
        const Multigraph& gi = sub.graph;
        EdgeSet all_ids, h_ids;
        for (const auto& e : gi.edges()) {
            all_ids.insert(e.id);
            if (h.count(e.id)) h_ids.insert(e.id);
        }
        NodeSet lb, rb;
        for (int v : chain.left_boundary[i]) lb.insert(sub.node_map.at(v));
        for (int v : chain.right_boundary[i]) rb.insert(sub.node_map.at(v));

        bool disjoint = true;
        for (int v : lb)
            if (rb.count(v)) disjoint = false;
        if (disjoint) {
            Multigraph hi(gi.node_count());
            for (const auto& e : gi.edges())
                if (h_ids.count(e.id)) hi.add_edge(e.u, e.v, e.w);
            auto flow = max_flow_min_cut(hi, unit_capacities(hi), lb, rb, Rational(3));
            if (flow.value < 3)
                return StructureViolation{static_cast<int>(i), "three-flow",
                                          "flow " + format_rational(flow.value)};
        }

        std::vector<int> fault_ids{-1};
        for (const auto& e : gi.edges()) fault_ids.push_back(e.id);
        for (int fid : fault_ids) {
            auto root_g = detail::roots_without(gi, all_ids, fid);
            auto root_h = detail::roots_without(gi, h_ids, fid);
            for (int y : rb)
                if (detail::set_reaches(root_g, lb, y) && !detail::set_reaches(root_h, lb, y))
                    return StructureViolation{static_cast<int>(i), "fault reachability",
                                              "node " + std::to_string(sub.to_original[static_cast<std::size_t>(y)]) +
                                                  " under fault " + std::to_string(fid)};
            for (int y : lb)
                if (detail::set_reaches(root_g, rb, y) && !detail::set_reaches(root_h, rb, y))
                    return StructureViolation{static_cast<int>(i), "fault reachability",
                                              "node " + std::to_string(sub.to_original[static_cast<std::size_t>(y)]) +
                                                  " under fault " + std::to_string(fid)};
        }

        auto root_g = detail::roots_without(gi, all_ids, -1);
        auto root_h = detail::roots_without(gi, h_ids, -1);
        for (int a : lb)
            for (int b : rb) {
                if (a == b) continue;
                if (root_g[static_cast<std::size_t>(a)] != root_g[static_cast<std::size_t>(b)]) continue;
                if (root_h[static_cast<std::size_t>(a)] == root_h[static_cast<std::size_t>(b)]) continue;
                return StructureViolation{
                    static_cast<int>(i), "boundary pair",
                    std::to_string(sub.to_original[static_cast<std::size_t>(a)]) + " and " +
                        std::to_string(sub.to_original[static_cast<std::size_t>(b)])};
            }
    }
    return std::nullopt;
}

}  // namespace rsnd

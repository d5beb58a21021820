#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsnd/multigraph.hpp"

namespace rsnd {

// Undirected flows. Each edge is modeled as two antiparallel arcs sharing the
// edge capacity; the reported per-edge flow is the absolute net value.

struct FlowResult {
    Rational value = 0;
    std::map<int, Rational> flow_per_edge;  // |net flow|, zero entries omitted
    NodeSet source_side;                    // closest min cut: residual reachability from X
    EdgeSet min_cut;
    bool limited = false;  // stopped at flow_limit; residual data is then skipped
};

inline std::map<int, Rational> unit_capacities(const Multigraph& g) {
    std::map<int, Rational> caps;
    for (const auto& e : g.edges()) caps[e.id] = 1;
    return caps;
}

inline std::map<int, Rational> weight_costs(const Multigraph& g) {
    std::map<int, Rational> costs;
    for (const auto& e : g.edges()) costs[e.id] = e.w;
    return costs;
}

inline std::map<int, int> unit_int_capacities(const Multigraph& g) {
    std::map<int, int> caps;
    for (const auto& e : g.edges()) caps[e.id] = 1;
    return caps;
}

namespace detail {

struct ArcNet {
    std::vector<int> head;           // arc -> target node
    std::vector<Rational> cap;       // residual capacity
    std::vector<int> edge_of;        // arc -> original edge id (pairs share it)
    std::vector<std::vector<int>> out;  // node -> arc indices
    void add_pair(int u, int v, const Rational& c, int edge_id) {
        int a = static_cast<int>(head.size());
        head.push_back(v);
        cap.push_back(c);
        edge_of.push_back(edge_id);
        head.push_back(u);
        cap.push_back(c);
        edge_of.push_back(edge_id);
        out[static_cast<std::size_t>(u)].push_back(a);
        out[static_cast<std::size_t>(v)].push_back(a + 1);
    }
};

}  // namespace detail

// Edmonds-Karp with exact rational capacities. X and Y are contracted
// internally (edge ids survive), so multi-source / multi-sink cuts come out
// directly. The source side of the final residual graph is the unique
// inclusion-minimal minimum cut side containing X.
inline FlowResult max_flow_min_cut(const Multigraph& g, const std::map<int, Rational>& capacity,
                                   const NodeSet& X, const NodeSet& Y,
                                   std::optional<Rational> flow_limit = std::nullopt) {
    if (X.empty() || Y.empty()) throw std::invalid_argument("flow endpoints must be nonempty");
    for (int v : X)
        if (Y.count(v)) throw std::invalid_argument("flow endpoint sets overlap");
    for (const auto& e : g.edges()) {
        auto it = capacity.find(e.id);
        if (it == capacity.end()) throw std::invalid_argument("capacity missing for edge " + std::to_string(e.id));
        if (it->second < 0) throw std::invalid_argument("negative capacity");
    }
    if (flow_limit && *flow_limit < 0) throw std::invalid_argument("negative flow limit");

    Contraction cx = contract(g, X);
    NodeSet y_img;
    for (int v : Y) y_img.insert(cx.node_map[static_cast<std::size_t>(v)]);
    Contraction cy = contract(cx.graph, y_img);
    const Multigraph& net = cy.graph;
    int src = cy.node_map[static_cast<std::size_t>(cx.supernode)];
    int snk = cy.supernode;

    detail::ArcNet arcs;
    arcs.out.assign(static_cast<std::size_t>(net.node_count()), {});
    for (const auto& e : net.edges()) arcs.add_pair(e.u, e.v, capacity.at(e.id), e.id);

    FlowResult res;
    std::vector<int> parent_arc(static_cast<std::size_t>(net.node_count()));
    while (true) {
        if (flow_limit && res.value >= *flow_limit) {
            res.limited = true;
            return res;
        }
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[static_cast<std::size_t>(src)] = -2;
        std::vector<int> queue{src};
        bool reached = false;
        for (std::size_t h = 0; h < queue.size() && !reached; ++h) {
            int u = queue[h];
            for (int a : arcs.out[static_cast<std::size_t>(u)]) {
                if (arcs.cap[static_cast<std::size_t>(a)] <= 0) continue;
                int to = arcs.head[static_cast<std::size_t>(a)];
                if (parent_arc[static_cast<std::size_t>(to)] != -1) continue;
                parent_arc[static_cast<std::size_t>(to)] = a;
                if (to == snk) {
                    reached = true;
                    break;
                }
                queue.push_back(to);
            }
        }
        if (!reached) break;
        Rational push = -1;
        for (int v = snk; v != src;) {
            int a = parent_arc[static_cast<std::size_t>(v)];
            if (push < 0 || arcs.cap[static_cast<std::size_t>(a)] < push) push = arcs.cap[static_cast<std::size_t>(a)];
            v = arcs.head[static_cast<std::size_t>(a ^ 1)];
        }
        if (flow_limit) {
            Rational room = *flow_limit - res.value;
            if (push > room) push = room;
        }
        for (int v = snk; v != src;) {
            int a = parent_arc[static_cast<std::size_t>(v)];
            arcs.cap[static_cast<std::size_t>(a)] -= push;
            arcs.cap[static_cast<std::size_t>(a ^ 1)] += push;
            v = arcs.head[static_cast<std::size_t>(a ^ 1)];
        }
        res.value += push;
    }

    // residual reachability from the contracted source
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()), 0);
    seen[static_cast<std::size_t>(src)] = 1;
    std::vector<int> queue{src};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int a : arcs.out[static_cast<std::size_t>(queue[h])]) {
            if (arcs.cap[static_cast<std::size_t>(a)] <= 0) continue;
            int to = arcs.head[static_cast<std::size_t>(a)];
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                queue.push_back(to);
            }
        }
    }
    if (seen[static_cast<std::size_t>(snk)]) throw internal_error("sink reachable after max flow");
    for (int v = 0; v < g.node_count(); ++v) {
        int img = cy.node_map[static_cast<std::size_t>(cx.node_map[static_cast<std::size_t>(v)])];
        if (seen[static_cast<std::size_t>(img)]) res.source_side.insert(v);
    }
    res.min_cut = cut_edges(g, res.source_side);

    // net flow per edge from the residual state (pair base arc has index 2i)
    const auto& net_edges = net.edges();
    for (std::size_t i = 0; i < net_edges.size(); ++i) {
        const Rational& c = capacity.at(net_edges[i].id);
        Rational netf = c - arcs.cap[2 * i];
        if (netf < 0) netf = -netf;
        if (netf != 0) res.flow_per_edge[net_edges[i].id] = netf;
    }
    return res;
}

inline Rational min_cut_value(const Multigraph& g, const std::map<int, Rational>& capacity, const NodeSet& X,
                              const NodeSet& Y) {
    return max_flow_min_cut(g, capacity, X, Y).value;
}

// Cardinality s-t min cut with an early exit once the value reaches `limit`.
// Returns min(min cut, limit).
inline int capped_cardinality_min_cut(const Multigraph& g, int s, int t, int limit) {
    auto res = max_flow_min_cut(g, unit_capacities(g), NodeSet{s}, NodeSet{t}, Rational(limit));
    return res.value.convert_to<int>();
}

struct McfResult {
    Rational cost = 0;
    int amount = 0;
    std::map<int, int> flow_per_edge;  // |net flow|, zero entries omitted
    EdgeSet support;
};

// Successive shortest augmenting paths (Bellman-Ford, exact rational costs).
// Capacities are integers, so the result is an integral flow. Infeasible
// requests report the maximum achievable amount.
inline McfResult min_cost_flow(const Multigraph& g, const std::map<int, Rational>& cost,
                               const std::map<int, int>& capacity, int src, int snk, int amount) {
    g.check_node(src);
    g.check_node(snk);
    if (src == snk) throw std::invalid_argument("flow endpoints coincide");
    if (amount < 0) throw std::invalid_argument("negative flow amount");
    const auto& edges = g.edges();
    for (const auto& e : edges) {
        if (!cost.count(e.id)) throw std::invalid_argument("cost missing for edge " + std::to_string(e.id));
        if (!capacity.count(e.id)) throw std::invalid_argument("capacity missing for edge " + std::to_string(e.id));
        if (cost.at(e.id) < 0) throw std::invalid_argument("negative edge cost");
        if (capacity.at(e.id) < 0) throw std::invalid_argument("negative capacity");
    }

    int n = g.node_count();
    int m = static_cast<int>(edges.size());
    // arcs 4i..4i+3: u->v and v->u forward arcs with their residual mirrors
    std::vector<long long> cap(static_cast<std::size_t>(4 * m), 0);
    std::vector<Rational> gamma(static_cast<std::size_t>(4 * m));
    std::vector<int> target(static_cast<std::size_t>(4 * m));
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        const Edge& e = edges[static_cast<std::size_t>(i)];
        const Rational& c = cost.at(e.id);
        long long ucap = capacity.at(e.id);
        int b = 4 * i;
        target[static_cast<std::size_t>(b)] = e.v;
        cap[static_cast<std::size_t>(b)] = ucap;
        gamma[static_cast<std::size_t>(b)] = c;
        target[static_cast<std::size_t>(b + 1)] = e.u;
        gamma[static_cast<std::size_t>(b + 1)] = -c;
        target[static_cast<std::size_t>(b + 2)] = e.u;
        cap[static_cast<std::size_t>(b + 2)] = ucap;
        gamma[static_cast<std::size_t>(b + 2)] = c;
        target[static_cast<std::size_t>(b + 3)] = e.v;
        gamma[static_cast<std::size_t>(b + 3)] = -c;
        out[static_cast<std::size_t>(e.u)].push_back(b);
        out[static_cast<std::size_t>(e.v)].push_back(b + 1);
        out[static_cast<std::size_t>(e.v)].push_back(b + 2);
        out[static_cast<std::size_t>(e.u)].push_back(b + 3);
    }

    McfResult res;
    while (res.amount < amount) {
        std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(n));
        std::vector<int> from(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(src)] = Rational(0);
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (int u = 0; u < n; ++u) {
                if (!dist[static_cast<std::size_t>(u)]) continue;
                for (int a : out[static_cast<std::size_t>(u)]) {
                    if (cap[static_cast<std::size_t>(a)] <= 0) continue;
                    int v = target[static_cast<std::size_t>(a)];
                    Rational cand = *dist[static_cast<std::size_t>(u)] + gamma[static_cast<std::size_t>(a)];
                    if (!dist[static_cast<std::size_t>(v)] || cand < *dist[static_cast<std::size_t>(v)]) {
                        dist[static_cast<std::size_t>(v)] = cand;
                        from[static_cast<std::size_t>(v)] = a;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (!dist[static_cast<std::size_t>(snk)])
            throw infeasible_error("flow of " + std::to_string(amount) + " requested but maximum is " +
                                   std::to_string(res.amount));
        long long push = amount - res.amount;
        for (int v = snk; v != src;) {
            int a = from[static_cast<std::size_t>(v)];
            push = std::min(push, cap[static_cast<std::size_t>(a)]);
            v = target[static_cast<std::size_t>(a ^ 1)];
        }
        for (int v = snk; v != src;) {
            int a = from[static_cast<std::size_t>(v)];
            cap[static_cast<std::size_t>(a)] -= push;
            cap[static_cast<std::size_t>(a ^ 1)] += push;
            v = target[static_cast<std::size_t>(a ^ 1)];
        }
        res.amount += static_cast<int>(push);
    }

    for (int i = 0; i < m; ++i) {
        const Edge& e = edges[static_cast<std::size_t>(i)];
        long long ucap = capacity.at(e.id);
        long long net = (ucap - cap[static_cast<std::size_t>(4 * i)]) - (ucap - cap[static_cast<std::size_t>(4 * i + 2)]);
        if (net < 0) net = -net;
        if (net != 0) {
            res.flow_per_edge[e.id] = static_cast<int>(net);
            res.support.insert(e.id);
            res.cost += Rational(net) * cost.at(e.id);
        }
    }
    return res;
}

}  // namespace rsnd

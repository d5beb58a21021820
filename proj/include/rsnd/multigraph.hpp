#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsnd/errors.hpp"
#include "rsnd/rational.hpp"

namespace rsnd {

using NodeSet = std::set<int>;
using EdgeSet = std::set<int>;

// Undirected weighted multigraph. Parallel edges are allowed, self loops are
// not. Every edge carries an id that survives induced subgraphs and
// contractions, so solutions computed on derived graphs can be unioned
// directly against the original edge set.
struct Edge {
    int id;
    int u;
    int v;
    Rational w;
};

class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("node count must be >= 0");
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int add_edge(int u, int v, Rational w = Rational(1)) {
        int id = edges_.empty() ? 0 : edges_.back().id + 1;
        push_edge(Edge{id, u, v, std::move(w)});
        return id;
    }

    // Rebuilds a graph from explicit edges (ids must be strictly increasing).
    static Multigraph with_edges(int n, std::vector<Edge> edges) {
        Multigraph g(n);
        for (auto& e : edges) g.push_edge(std::move(e));
        return g;
    }

    bool has_edge(int id) const { return index_of(id) >= 0; }

    const Edge& edge(int id) const {
        int idx = index_of(id);
        if (idx < 0) throw std::invalid_argument("no edge with id " + std::to_string(id));
        return edges_[static_cast<std::size_t>(idx)];
    }

    int degree(int v) const {
        check_node(v);
        int d = 0;
        for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
        return d;
    }

    Rational total_weight(const EdgeSet& ids) const {
        Rational sum = 0;
        for (int id : ids) sum += edge(id).w;
        return sum;
    }

    void check_node(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("node " + std::to_string(v) + " out of range");
    }

  private:
    void push_edge(Edge e) {
        check_node(e.u);
        check_node(e.v);
        if (e.u == e.v) throw std::invalid_argument("self loops are not supported");
        if (e.w < 0) throw std::invalid_argument("negative edge weight");
        if (!edges_.empty() && e.id <= edges_.back().id)
            throw std::invalid_argument("edge ids must be strictly increasing");
        edges_.push_back(std::move(e));
    }

    int index_of(int id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, int key) { return e.id < key; });
        if (it == edges_.end() || it->id != id) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
};

namespace detail {

inline std::vector<char> node_mask(const Multigraph& g, const NodeSet& s) {
    std::vector<char> mask(static_cast<std::size_t>(g.node_count()), 0);
    for (int v : s) {
        g.check_node(v);
        mask[static_cast<std::size_t>(v)] = 1;
    }
    return mask;
}

// Plain union-find, used all over for component bookkeeping.
struct Dsu {
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace detail

// Edges with exactly one endpoint in s. Rejects the trivial sides.
inline EdgeSet cut_edges(const Multigraph& g, const NodeSet& s) {
    if (s.empty()) throw std::invalid_argument("cut side must be nonempty");
    if (static_cast<int>(s.size()) >= g.node_count())
        throw std::invalid_argument("cut side must be a proper subset");
    auto mask = detail::node_mask(g, s);
    EdgeSet out;
    for (const auto& e : g.edges())
        if (mask[static_cast<std::size_t>(e.u)] != mask[static_cast<std::size_t>(e.v)]) out.insert(e.id);
    return out;
}

struct CutSide {
    NodeSet side;
    EdgeSet boundary;
};

struct Contraction {
    Multigraph graph;
    int supernode = -1;
    // node_map[old] = new index; every node of s maps to supernode.
    std::vector<int> node_map;
};

// Merges s into one node. Surviving nodes keep their relative order and
// occupy 0..n-|s|-1; the supernode takes the last index. Edges inside s
// become self loops and are dropped; everything else keeps its id.
inline Contraction contract(const Multigraph& g, const NodeSet& s) {
    if (s.empty()) throw std::invalid_argument("contraction set must be nonempty");
    auto mask = detail::node_mask(g, s);
    int n = g.node_count();
    Contraction res;
    res.node_map.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!mask[static_cast<std::size_t>(v)]) res.node_map[static_cast<std::size_t>(v)] = next++;
    res.supernode = next;
    for (int v = 0; v < n; ++v)
        if (mask[static_cast<std::size_t>(v)]) res.node_map[static_cast<std::size_t>(v)] = res.supernode;
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        int u = res.node_map[static_cast<std::size_t>(e.u)];
        int v = res.node_map[static_cast<std::size_t>(e.v)];
        if (u == v) continue;
        kept.push_back(Edge{e.id, u, v, e.w});
    }
    res.graph = Multigraph::with_edges(next + 1, std::move(kept));
    return res;
}

struct Subgraph {
    Multigraph graph;
    std::vector<int> to_original;  // new index -> original node
    std::vector<int> node_map;     // original node -> new index, -1 if absent
};

// Induced subgraph on s; nodes are relabeled 0..|s|-1 in ascending original
// order, edge ids are preserved.
inline Subgraph induced_subgraph(const Multigraph& g, const NodeSet& s) {
    auto mask = detail::node_mask(g, s);
    Subgraph res;
    res.node_map.assign(static_cast<std::size_t>(g.node_count()), -1);
    for (int v : s) {
        res.node_map[static_cast<std::size_t>(v)] = static_cast<int>(res.to_original.size());
        res.to_original.push_back(v);
    }
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        if (!mask[static_cast<std::size_t>(e.u)] || !mask[static_cast<std::size_t>(e.v)]) continue;
        kept.push_back(Edge{e.id, res.node_map[static_cast<std::size_t>(e.u)],
                            res.node_map[static_cast<std::size_t>(e.v)], e.w});
    }
    res.graph = Multigraph::with_edges(static_cast<int>(s.size()), std::move(kept));
    return res;
}

// Components ordered by smallest contained node.
inline std::vector<NodeSet> connected_components(const Multigraph& g) {
    detail::Dsu dsu(g.node_count());
    for (const auto& e : g.edges()) dsu.unite(e.u, e.v);
    std::map<int, NodeSet> by_root;
    for (int v = 0; v < g.node_count(); ++v) by_root[dsu.find(v)].insert(v);
    std::vector<NodeSet> out;
    out.reserve(by_root.size());
    for (auto& [root, nodes] : by_root) out.push_back(std::move(nodes));
    return out;
}

struct QuotientEdge {
    int to_comp;
    int edge_id;
    int near_node;  // endpoint inside the source component
    int far_node;   // endpoint inside to_comp
};

struct BridgeStep {
    int edge_id;
    int from_comp;
    int to_comp;
    int near_node;
    int far_node;
};

// Bridges plus 2-edge-connected components. The quotient over the components
// with the bridges as edges is a forest (one tree per connected component).
struct ComponentTree {
    std::vector<NodeSet> components;  // ordered by smallest contained node
    EdgeSet bridges;
    std::vector<int> comp_of;                      // node -> component index
    std::vector<std::vector<QuotientEdge>> quotient;  // component adjacency

    // Bridge walk between two components, empty if cu == cv, nullopt if they
    // sit in different connected components of the underlying graph.
    std::optional<std::vector<BridgeStep>> path(int cu, int cv) const {
        int m = static_cast<int>(components.size());
        if (cu < 0 || cu >= m || cv < 0 || cv >= m)
            throw std::invalid_argument("component index out of range");
        std::vector<int> prev(static_cast<std::size_t>(m), -2);
        std::vector<int> via(static_cast<std::size_t>(m), -1);
        std::vector<int> queue{cu};
        prev[static_cast<std::size_t>(cu)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int c = queue[head];
            if (c == cv) break;
            for (std::size_t i = 0; i < quotient[static_cast<std::size_t>(c)].size(); ++i) {
                const auto& q = quotient[static_cast<std::size_t>(c)][i];
                if (prev[static_cast<std::size_t>(q.to_comp)] != -2) continue;
                prev[static_cast<std::size_t>(q.to_comp)] = c;
                via[static_cast<std::size_t>(q.to_comp)] = static_cast<int>(i);
                queue.push_back(q.to_comp);
            }
        }
        if (prev[static_cast<std::size_t>(cv)] == -2) return std::nullopt;
        std::vector<BridgeStep> steps;
        for (int c = cv; c != cu; c = prev[static_cast<std::size_t>(c)]) {
            int p = prev[static_cast<std::size_t>(c)];
            const auto& q = quotient[static_cast<std::size_t>(p)][static_cast<std::size_t>(via[static_cast<std::size_t>(c)])];
            steps.push_back(BridgeStep{q.edge_id, p, c, q.near_node, q.far_node});
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    }
};

// Iterative lowlink bridge finding; parallel edges never count as bridges
// because only the specific tree-edge instance is skipped on the way back.
inline ComponentTree bridges_and_2ecc(const Multigraph& g) {
    int n = g.node_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (neighbor, edge idx)
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[static_cast<std::size_t>(edges[i].u)].push_back({edges[i].v, static_cast<int>(i)});
        adj[static_cast<std::size_t>(edges[i].v)].push_back({edges[i].u, static_cast<int>(i)});
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    ComponentTree tree;
    int timer = 0;
    struct Frame {
        int node;
        int in_edge;  // edge idx used to enter, -1 at roots
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> stack{Frame{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto& out = adj[static_cast<std::size_t>(f.node)];
            if (f.next < out.size()) {
                auto [to, idx] = out[f.next++];
                if (idx == f.in_edge) continue;
                if (disc[static_cast<std::size_t>(to)] != -1) {
                    low[static_cast<std::size_t>(f.node)] =
                        std::min(low[static_cast<std::size_t>(f.node)], disc[static_cast<std::size_t>(to)]);
                } else {
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    stack.push_back(Frame{to, idx, 0});
                }
            } else {
                if (f.in_edge >= 0) {
                    int parent = stack[stack.size() - 2].node;
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(f.node)]);
                    if (low[static_cast<std::size_t>(f.node)] > disc[static_cast<std::size_t>(parent)])
                        tree.bridges.insert(edges[static_cast<std::size_t>(f.in_edge)].id);
                }
                stack.pop_back();
            }
        }
    }
    detail::Dsu dsu(n);
    for (const auto& e : edges)
        if (!tree.bridges.count(e.id)) dsu.unite(e.u, e.v);
    std::map<int, int> root_to_comp;
    tree.comp_of.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        auto it = root_to_comp.find(r);
        if (it == root_to_comp.end()) {
            it = root_to_comp.insert({r, static_cast<int>(tree.components.size())}).first;
            tree.components.push_back({});
        }
        tree.comp_of[static_cast<std::size_t>(v)] = it->second;
        tree.components[static_cast<std::size_t>(it->second)].insert(v);
    }
    tree.quotient.assign(tree.components.size(), {});
    for (int id : tree.bridges) {
        const Edge& e = g.edge(id);
        int cu = tree.comp_of[static_cast<std::size_t>(e.u)];
        int cv = tree.comp_of[static_cast<std::size_t>(e.v)];
        tree.quotient[static_cast<std::size_t>(cu)].push_back(QuotientEdge{cv, id, e.u, e.v});
        tree.quotient[static_cast<std::size_t>(cv)].push_back(QuotientEdge{cu, id, e.v, e.u});
    }
    return tree;
}

inline bool is_two_edge_connected(const Multigraph& g) {
    if (g.node_count() < 2) return false;
    if (connected_components(g).size() != 1) return false;
    return bridges_and_2ecc(g).bridges.empty();
}

struct Demand {
    int s;
    int t;
    int k;
};

struct Instance {
    Multigraph graph;
    std::vector<Demand> demands;
};

inline std::vector<Demand> all_pairs_demands(int n, int k) {
    std::vector<Demand> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.push_back(Demand{u, v, k});
    return out;
}

}  // namespace rsnd

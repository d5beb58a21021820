#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rsnd/iterative_rounding.hpp"
#include "rsnd/multigraph.hpp"

namespace rsnd {

// Reduction of relative demands to the 2-edge-connected components. A demand
// between different components is split along its bridge-tree path: every
// bridge on the path is mandatory, and inside each visited component the
// entry and exit nodes inherit the demand. Within a component no single
// fault can disconnect anything, so the lifted demands are plain
// edge-connectivity requirements there. A simple path cannot leave a
// component and return (it would need the same bridge twice), which makes
// the lifted demands exactly what any feasible solution already satisfies;
// entry/exit nodes may be terminals or not, both lift the same way.

class DemandFunction {
  public:
    int get(int u, int v) const {
        auto it = req_.find(key(u, v));
        return it == req_.end() ? 0 : it->second;
    }
    void raise(int u, int v, int k) {
        if (u == v || k <= 0) return;
        int& slot = req_[key(u, v)];
        slot = std::max(slot, k);
    }
    const std::map<std::pair<int, int>, int>& pairs() const { return req_; }
    std::vector<Demand> to_demands() const {
        std::vector<Demand> out;
        for (const auto& [uv, k] : req_) out.push_back(Demand{uv.first, uv.second, k});
        return out;
    }

  private:
    static std::pair<int, int> key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }
    std::map<std::pair<int, int>, int> req_;
};

struct LiftedInstances {
    ComponentTree tree;
    std::vector<DemandFunction> component_demands;  // original node labels, per tree component
    EdgeSet bridge_edges;                           // bridges on the path of some positive demand
};

inline LiftedInstances lift_demands(const Multigraph& g, const std::vector<Demand>& demands) {
    LiftedInstances out;
    out.tree = bridges_and_2ecc(g);
    out.component_demands.resize(out.tree.components.size());
    for (const auto& d : demands) {
        g.check_node(d.s);
        g.check_node(d.t);
        if (d.s == d.t) throw std::invalid_argument("demand endpoints coincide");
        if (d.k < 1) throw std::invalid_argument("demand requirement must be >= 1");
        int cs = out.tree.comp_of[static_cast<std::size_t>(d.s)];
        int ct = out.tree.comp_of[static_cast<std::size_t>(d.t)];
        if (cs == ct) {
            out.component_demands[static_cast<std::size_t>(cs)].raise(d.s, d.t, d.k);
            continue;
        }
        auto path = out.tree.path(cs, ct);
        if (!path) continue;  // different connected components: the demand is vacuous
        int at = d.s;
        int comp = cs;
        for (const auto& step : *path) {
            out.bridge_edges.insert(step.edge_id);
            out.component_demands[static_cast<std::size_t>(comp)].raise(at, step.near_node, d.k);
            at = step.far_node;
            comp = step.to_comp;
        }
        out.component_demands[static_cast<std::size_t>(comp)].raise(at, d.t, d.k);
    }
    return out;
}

// Lift, solve each component with the supplied solver, reassemble. Edge ids
// survive induced subgraphs unchanged, so the union needs no translation.
// solve(sub, local_demands) sees component-local node labels.
template <typename ComponentSolver>
inline EdgeSet solve_via_components(const Multigraph& g, const std::vector<Demand>& demands,
                                    ComponentSolver&& solve) {
    LiftedInstances lifted = lift_demands(g, demands);
    EdgeSet result = lifted.bridge_edges;
    for (std::size_t c = 0; c < lifted.tree.components.size(); ++c) {
        auto local = lifted.component_demands[c].to_demands();
        if (local.empty()) continue;
        Subgraph sub = induced_subgraph(g, lifted.tree.components[c]);
        for (auto& d : local) {
            d.s = sub.node_map.at(d.s);
            d.t = sub.node_map.at(d.t);
        }
        EdgeSet part = solve(sub.graph, local);
        result.insert(part.begin(), part.end());
    }
    return result;
}

// Relative design for demands up to 2: reduce to components, where the
// demands become absolute, and run the rounding solver on each. Factor 2.
inline EdgeSet rsnd2(const Multigraph& g, const std::vector<Demand>& demands,
                     RoundingTrace* trace = nullptr) {
    for (const auto& d : demands)
        if (d.k > 2) throw structural_error("demand requirement above 2 needs the specialised solver");
    return solve_via_components(g, demands, [&](const Multigraph& sub, const std::vector<Demand>& local) {
        return snd_jain(sub, local, trace);
    });
}

inline EdgeSet rsnd2(const Multigraph& g, const DemandFunction& demands, RoundingTrace* trace = nullptr) {
    return rsnd2(g, demands.to_demands(), trace);
}

}  // namespace rsnd

#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rsnd/cut_requirement.hpp"
#include "rsnd/flow.hpp"
#include "rsnd/multigraph.hpp"

// Independent brute-force oracles the fast implementations are measured
// against. Everything here enumerates, nothing here shares logic with the
// algorithms under test beyond the shared graph container.

namespace brute {

inline rsnd::NodeSet side_of_mask(unsigned mask, int n) {
    rsnd::NodeSet s;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.insert(v);
    return s;
}

// all proper nonempty node subsets
inline std::vector<rsnd::NodeSet> all_sides(int n) {
    std::vector<rsnd::NodeSet> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) out.push_back(side_of_mask(mask, n));
    return out;
}

// does any cut violate the requirement at the point x (x over non-committed
// edges only)?
inline bool exists_violated_cut(const rsnd::CutRequirement& req, const std::map<int, rsnd::Rational>& x) {
    const rsnd::Multigraph& g = *req.g;
    for (const auto& side : all_sides(g.node_count())) {
        rsnd::Rational lhs = 0;
        int boundary = 0, overlap = 0;
        for (const auto& e : g.edges()) {
            bool cu = side.count(e.u) > 0, cv = side.count(e.v) > 0;
            if (cu == cv) continue;
            ++boundary;
            if (req.fprime.count(e.id))
                ++overlap;
            else
                lhs += x.at(e.id);
        }
        if (lhs < std::min(req.k, boundary) - overlap) return true;
    }
    return false;
}

struct CutFamily {
    int value = -1;                      // smallest boundary size
    std::vector<rsnd::NodeSet> sides;    // all sides attaining it
};

// minimum cardinality cut between the node set x and t, with every side
// attaining it (sides contain x, never t)
inline CutFamily min_cut_sides(const rsnd::Multigraph& g, const rsnd::NodeSet& x, int t) {
    int n = g.node_count();
    CutFamily fam;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        if ((mask >> t) & 1u) continue;
        bool has_x = true;
        for (int v : x)
            if (!((mask >> v) & 1u)) has_x = false;
        if (!has_x) continue;
        int boundary = 0;
        for (const auto& e : g.edges()) {
            bool cu = (mask >> e.u) & 1u, cv = (mask >> e.v) & 1u;
            if (cu != cv) ++boundary;
        }
        if (fam.value < 0 || boundary < fam.value) {
            fam.value = boundary;
            fam.sides.clear();
        }
        if (boundary == fam.value) fam.sides.push_back(side_of_mask(mask, n));
    }
    return fam;
}

// cheapest edge subset connecting every pair, by full enumeration
inline rsnd::Rational steiner_opt(const rsnd::Multigraph& g,
                                  const std::vector<std::pair<int, int>>& pairs) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::optional<rsnd::Rational> best;
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        rsnd::detail::Dsu dsu(g.node_count());
        rsnd::Rational cost = 0;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1ull) {
                dsu.unite(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
                cost += edges[static_cast<std::size_t>(i)].w;
            }
        bool ok = true;
        for (auto [a, b] : pairs)
            if (dsu.find(a) != dsu.find(b)) ok = false;
        if (!ok) continue;
        if (!best || cost < *best) best = cost;
    }
    if (!best) throw std::invalid_argument("no subset connects all pairs");
    return *best;
}

// cheapest edge subset carrying q edge-disjoint s-t paths, by enumeration
inline std::optional<rsnd::Rational> flow_support_opt(const rsnd::Multigraph& g, int s, int t, int q) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::optional<rsnd::Rational> best;
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<rsnd::Edge> kept;
        rsnd::Rational cost = 0;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1ull) {
                kept.push_back(edges[static_cast<std::size_t>(i)]);
                cost += edges[static_cast<std::size_t>(i)].w;
            }
        if (best && cost >= *best) continue;
        auto sub = rsnd::Multigraph::with_edges(g.node_count(), std::move(kept));
        if (sub.edge_count() == 0 && q > 0) continue;
        auto flow = rsnd::max_flow_min_cut(sub, rsnd::unit_capacities(sub), rsnd::NodeSet{s},
                                           rsnd::NodeSet{t}, rsnd::Rational(q));
        if (flow.value >= q) best = cost;
    }
    return best;
}

// random rational in [0,1] with a small denominator
inline rsnd::Rational random_unit_rational(std::mt19937_64& rng) {
    int den = 1 + static_cast<int>(rng() % 6);
    int num = static_cast<int>(rng() % static_cast<unsigned long long>(den + 1));
    return rsnd::Rational(num, den);
}

}  // namespace brute

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "rsnd/cut_requirement.hpp"
#include "rsnd/lp.hpp"

namespace rsnd {

// Iterative LP rounding. Each round solves the covering relaxation over the
// edges not yet committed, promotes every variable at or above 1/2 into the
// committed set F', and re-solves; the extension of x by 1 on F' stays
// feasible, so progress is monotone and at most m rounds happen. The loop
// leans on an extreme-point property of these cut polytopes: any vertex with
// a positive remaining requirement has a coordinate >= 1/2. A final vertex
// that is nonzero yet everywhere below 1/2 is therefore a hard failure, not
// a fallback path.

struct RoundingTrace {
    int rounds = 0;          // LP solves
    int cut_iterations = 0;  // separation rows across all rounds
    int promoted = 0;        // edges promoted by rounding (beyond the initial committed set)
    Rational first_lp_value = 0;
};

namespace detail {

struct FreeVars {
    std::vector<int> ids;  // ascending edge ids outside F'
    std::vector<Rational> weights;
};

inline FreeVars collect_free(const Multigraph& g, const EdgeSet& fprime) {
    FreeVars fv;
    for (const auto& e : g.edges()) {
        if (fprime.count(e.id)) continue;
        fv.ids.push_back(e.id);
        fv.weights.push_back(e.w);
    }
    return fv;
}

inline std::map<int, Rational> to_point(const FreeVars& fv, const std::vector<Rational>& x) {
    std::map<int, Rational> pt;
    for (std::size_t i = 0; i < fv.ids.size(); ++i) pt[fv.ids[i]] = x[i];
    return pt;
}

inline int var_of(const FreeVars& fv, int id) {
    auto it = std::lower_bound(fv.ids.begin(), fv.ids.end(), id);
    if (it == fv.ids.end() || *it != id) throw internal_error("separation returned a committed edge");
    return static_cast<int>(it - fv.ids.begin());
}

inline CoverRow to_row(const FreeVars& fv, const ViolatedCut& cut) {
    CoverRow row;
    row.rhs = cut.requirement;
    for (int id : cut.row_vars) row.vars.push_back(var_of(fv, id));
    return row;
}

// One rounding pass driven by the given separation oracle (parameterised so
// the uniform and the demand-list problems share the loop).
template <typename Separate>
inline EdgeSet round_until_feasible(const Multigraph& g, EdgeSet fprime, Separate&& separate,
                                    RoundingTrace* trace) {
    while (true) {
        FreeVars fv = collect_free(g, fprime);
        auto oracle = [&](const std::vector<Rational>& x) -> std::optional<CoverRow> {
            auto cut = separate(fprime, to_point(fv, x));
            if (!cut) return std::nullopt;
            return to_row(fv, *cut);
        };
        auto res = cutting_plane_solve(static_cast<int>(fv.ids.size()), fv.weights, oracle);
        if (trace) {
            if (trace->rounds == 0) trace->first_lp_value = res.solution.objective;
            ++trace->rounds;
            trace->cut_iterations += res.iterations;
        }
        EdgeSet half;
        bool any_positive = false;
        for (std::size_t i = 0; i < fv.ids.size(); ++i) {
            const Rational& v = res.solution.x[i];
            if (v > 0) any_positive = true;
            if (v >= Rational(1, 2)) half.insert(fv.ids[i]);
        }
        if (half.empty()) {
            if (any_positive) throw internal_error("vertex solution has no coordinate at or above 1/2");
            return fprime;
        }
        if (trace) trace->promoted += static_cast<int>(half.size());
        fprime.insert(half.begin(), half.end());
    }
}

}  // namespace detail

// Uniform fault tolerance, arbitrary weights: start from the forced edges
// (those inside some cut of size <= k, mandatory in every solution), then
// round. Factor 2 against the optimum.
inline EdgeSet kefts_weighted(const Multigraph& g, int k, RoundingTrace* trace = nullptr) {
    EdgeSet fprime = forced_edges(g, k);
    return detail::round_until_feasible(
        g, std::move(fprime),
        [&](const EdgeSet& committed, const std::map<int, Rational>& x) {
            CutRequirement req{&g, k, committed};
            return separate_kefts(req, x);
        },
        trace);
}

struct UnweightedResult {
    EdgeSet edges;
    int fractional_edges = 0;    // variables strictly between 0 and 1
    int high_degree_nodes = 0;   // nodes of degree >= k
    Rational lp_value = 0;
};

// Uniform fault tolerance, uniform weights: one LP solve, keep every edge
// with positive value. Any cut with remaining requirement f holds at least f
// positive variables (each is at most 1), so the support plus the forced set
// is feasible outright; factor 1 + 4/k. At a vertex the fractional support
// is bounded by twice the number of high-degree nodes, asserted here.
inline UnweightedResult kefts_unweighted(const Multigraph& g, int k, RoundingTrace* trace = nullptr) {
    const auto& edges = g.edges();
    for (const auto& e : edges)
        if (e.w != edges.front().w) throw std::invalid_argument("uniform edge weights required");
    EdgeSet forced = forced_edges(g, k);
    CutRequirement req{&g, k, forced};
    detail::FreeVars fv = detail::collect_free(g, forced);
    auto oracle = [&](const std::vector<Rational>& x) -> std::optional<CoverRow> {
        auto cut = separate_kefts(req, detail::to_point(fv, x));
        if (!cut) return std::nullopt;
        return detail::to_row(fv, *cut);
    };
    auto res = cutting_plane_solve(static_cast<int>(fv.ids.size()), fv.weights, oracle);
    if (trace) {
        trace->rounds = 1;
        trace->cut_iterations = res.iterations;
        trace->first_lp_value = res.solution.objective;
    }
    UnweightedResult out;
    out.edges = forced;
    out.lp_value = res.solution.objective;
    for (std::size_t i = 0; i < fv.ids.size(); ++i) {
        const Rational& v = res.solution.x[i];
        if (v > 0) out.edges.insert(fv.ids[i]);
        if (v > 0 && v < 1) ++out.fractional_edges;
    }
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) >= k) ++out.high_degree_nodes;
    if (out.fractional_edges > 2 * out.high_degree_nodes)
        throw internal_error("fractional support exceeds twice the high-degree node count");
    return out;
}

// Classical survivable network design on explicit demands (s, t, k): cut
// requirement of S is the largest k over demands split by S. Factor 2.
// Throws infeasible_error when a demand asks for more than the minimum cut.
inline EdgeSet snd_jain(const Multigraph& g, const std::vector<Demand>& demands,
                        RoundingTrace* trace = nullptr) {
    for (const auto& d : demands) {
        g.check_node(d.s);
        g.check_node(d.t);
        if (d.s == d.t) throw std::invalid_argument("demand endpoints coincide");
        if (d.k < 1) throw std::invalid_argument("demand requirement must be >= 1");
    }
    return detail::round_until_feasible(
        g, EdgeSet{},
        [&](const EdgeSet& committed, const std::map<int, Rational>& x) {
            return separate_snd(g, demands, committed, x);
        },
        trace);
}

// Feasibility test for a candidate uniform-fault-tolerance subgraph via the
// cut characterisation: H works iff it contains all forced edges and the
// all-zero point on the remaining edges separates nothing.
inline bool kefts_feasible(const Multigraph& g, int k, const EdgeSet& h) {
    for (int id : h) g.edge(id);
    EdgeSet forced = forced_edges(g, k);
    for (int id : forced)
        if (!h.count(id)) return false;
    CutRequirement req{&g, k, h};
    std::map<int, Rational> zero;
    for (const auto& e : g.edges())
        if (!h.count(e.id)) zero[e.id] = 0;
    return !separate_kefts(req, zero).has_value();
}

}  // namespace rsnd

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsnd/flow.hpp"
#include "rsnd/multigraph.hpp"

namespace rsnd {

// Cut requirements for uniform fault tolerance k. The requirement of a node
// set S is measured against the ORIGINAL graph:
//   f_{F'}(S) = min(k, |d_G(S)|) - |d_G(S) /\ F'|
// where F' is the set of edges already committed to the solution. F below is
// the forced set: edges lying in some cut of size <= k, which every feasible
// solution must contain.

inline EdgeSet forced_edges(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("fault parameter must be >= 1");
    EdgeSet forced;
    for (const auto& e : g.edges())
        if (capped_cardinality_min_cut(g, e.u, e.v, k + 1) <= k) forced.insert(e.id);
    return forced;
}

struct CutRequirement {
    const Multigraph* g = nullptr;
    int k = 1;
    EdgeSet fprime;
};

// Validating constructor: F' must contain every forced edge.
inline CutRequirement make_requirement(const Multigraph& g, int k, EdgeSet fprime) {
    for (int id : fprime) g.edge(id);
    EdgeSet forced = forced_edges(g, k);
    for (int id : forced)
        if (!fprime.count(id))
            throw std::invalid_argument("F' is missing forced edge " + std::to_string(id));
    return CutRequirement{&g, k, std::move(fprime)};
}

namespace detail {

struct CutStats {
    int boundary_size = 0;
    int fprime_overlap = 0;
};

inline CutStats cut_stats(const CutRequirement& req, const std::vector<char>& mask) {
    CutStats st;
    for (const auto& e : req.g->edges()) {
        if (mask[static_cast<std::size_t>(e.u)] == mask[static_cast<std::size_t>(e.v)]) continue;
        ++st.boundary_size;
        if (req.fprime.count(e.id)) ++st.fprime_overlap;
    }
    return st;
}

}  // namespace detail

inline int f_value(const CutRequirement& req, const NodeSet& side) {
    auto mask = detail::node_mask(*req.g, side);
    if (side.empty() || static_cast<int>(side.size()) >= req.g->node_count())
        throw std::invalid_argument("cut side must be proper and nonempty");
    auto st = detail::cut_stats(req, mask);
    return std::min(req.k, st.boundary_size) - st.fprime_overlap;
}

// A cut is empty when all its boundary edges are already in F'.
inline bool is_empty_cut(const CutRequirement& req, const NodeSet& side) {
    auto mask = detail::node_mask(*req.g, side);
    if (side.empty() || static_cast<int>(side.size()) >= req.g->node_count())
        throw std::invalid_argument("cut side must be proper and nonempty");
    auto st = detail::cut_stats(req, mask);
    return st.boundary_size == st.fprime_overlap;
}

struct ViolatedCut {
    NodeSet side;
    EdgeSet boundary;
    std::vector<int> row_vars;  // boundary minus F', ascending edge ids
    int requirement = 0;        // f_{F'}(side)
    Rational lhs = 0;           // sum of x over row_vars
};

namespace detail {

inline std::map<int, Rational> extended_point(const Multigraph& g, const EdgeSet& fprime,
                                              const std::map<int, Rational>& x) {
    std::map<int, Rational> ext;
    for (const auto& e : g.edges()) {
        if (fprime.count(e.id)) {
            ext[e.id] = 1;
            continue;
        }
        auto it = x.find(e.id);
        if (it == x.end()) throw std::invalid_argument("x missing for edge " + std::to_string(e.id));
        if (it->second < 0 || it->second > 1) throw std::invalid_argument("x outside [0,1]");
        ext[e.id] = it->second;
    }
    return ext;
}

inline ViolatedCut cut_from_side(const CutRequirement& req, NodeSet side, const std::map<int, Rational>& x) {
    ViolatedCut out;
    out.side = std::move(side);
    out.boundary = cut_edges(*req.g, out.side);
    for (int id : out.boundary) {
        if (req.fprime.count(id)) continue;
        out.row_vars.push_back(id);
        out.lhs += x.at(id);
    }
    out.requirement = f_value(req, out.side);
    return out;
}

}  // namespace detail

// Separation for the uniform requirement. Scans ordered node pairs (u, v) in
// lexicographic order; for each pair takes the minimum cut under x extended
// by 1 on F' (closest side to u) and reports the first cut whose x-mass on
// the non-committed boundary is below its requirement. A violated constraint
// exists iff some scanned minimum cut is violated, so "none" certifies
// feasibility of x for every cut simultaneously.
inline std::optional<ViolatedCut> separate_kefts(const CutRequirement& req, const std::map<int, Rational>& x) {
    const Multigraph& g = *req.g;
    auto ext = detail::extended_point(g, req.fprime, x);
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v = 0; v < g.node_count(); ++v) {
            if (u == v) continue;
            auto flow = max_flow_min_cut(g, ext, NodeSet{u}, NodeSet{v});
            auto cand = detail::cut_from_side(req, flow.source_side, ext);
            if (cand.lhs < cand.requirement) return cand;
        }
    }
    return std::nullopt;
}

// Separation for explicit demand lists (classical survivable network design):
// the requirement of S is the largest k_i over demands split by S. Returns
// the first violated minimum cut in demand order.
inline std::optional<ViolatedCut> separate_snd(const Multigraph& g, const std::vector<Demand>& demands,
                                               const EdgeSet& fprime, const std::map<int, Rational>& x) {
    auto ext = detail::extended_point(g, fprime, x);
    for (const auto& d : demands) {
        g.check_node(d.s);
        g.check_node(d.t);
        if (d.s == d.t) throw std::invalid_argument("demand endpoints coincide");
        auto flow = max_flow_min_cut(g, ext, NodeSet{d.s}, NodeSet{d.t});
        if (flow.value >= d.k) continue;
        const NodeSet& side = flow.source_side;
        int req_value = 0;
        for (const auto& other : demands) {
            bool in_s = side.count(other.s) > 0;
            bool in_t = side.count(other.t) > 0;
            if (in_s != in_t) req_value = std::max(req_value, other.k);
        }
        ViolatedCut out;
        out.side = side;
        out.boundary = cut_edges(g, side);
        int overlap = 0;
        for (int id : out.boundary) {
            if (fprime.count(id)) {
                ++overlap;
                continue;
            }
            out.row_vars.push_back(id);
            out.lhs += ext.at(id);
        }
        out.requirement = req_value - overlap;
        if (out.lhs >= out.requirement) throw internal_error("minimum cut below demand is not violated");
        return out;
    }
    return std::nullopt;
}

struct LwsViolation {
    NodeSet a;
    NodeSet b;
    std::string which;
};

// Exhaustive check of two structural facts about f_{F'} used by the rounding
// analysis, over all pairs of nonempty-cut sides A, B:
//  - if A and B are nonempty cuts then A\B and B\A are, or A/\B and A|B are;
//  - f(A) + f(B) <= max(f(A\B) + f(B\A), f(A/\B) + f(A|B)).
// Exponential; guarded to small graphs.
inline std::optional<LwsViolation> lws_check(const CutRequirement& req) {
    const Multigraph& g = *req.g;
    int n = g.node_count();
    if (n > 12) throw resource_error("lws_check is exhaustive; refusing n > 12");
    unsigned full = (n >= 1) ? ((1u << n) - 1) : 0u;
    std::vector<int> fval(full + 1, 0);
    std::vector<char> nonempty_cut(full + 1, 0);
    for (unsigned mask = 0; mask <= full; ++mask) {
        int boundary = 0, overlap = 0;
        for (const auto& e : g.edges()) {
            bool cu = (mask >> e.u) & 1u;
            bool cv = (mask >> e.v) & 1u;
            if (cu == cv) continue;
            ++boundary;
            if (req.fprime.count(e.id)) ++overlap;
        }
        fval[mask] = std::min(req.k, boundary) - overlap;
        nonempty_cut[mask] = boundary > overlap;
    }
    auto to_set = [&](unsigned mask) {
        NodeSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.insert(v);
        return s;
    };
    for (unsigned a = 1; a < full; ++a) {
        if (!nonempty_cut[a]) continue;
        for (unsigned b = 1; b < full; ++b) {
            if (b == a || !nonempty_cut[b]) continue;
            unsigned a_minus = a & ~b, b_minus = b & ~a, inter = a & b, uni = a | b;
            bool diff_pair = nonempty_cut[a_minus] && nonempty_cut[b_minus];
            bool lattice_pair = nonempty_cut[inter] && nonempty_cut[uni];
            if (!diff_pair && !lattice_pair)
                return LwsViolation{to_set(a), to_set(b), "set pair lemma"};
            int lhs = fval[a] + fval[b];
            if (lhs > fval[a_minus] + fval[b_minus] && lhs > fval[inter] + fval[uni])
                return LwsViolation{to_set(a), to_set(b), "local weak supermodularity"};
        }
    }
    return std::nullopt;
}

// Four-region abstraction of a pair of crossing node sets A, B: all that the
// requirement function can see is the six cross-region edge counts. Region
// indices: 0 = A\B, 1 = B\A, 2 = A/\B, 3 = rest. Used as a fixture for the
// boundary cases of f; realize() produces a concrete multigraph with one node
// per region and parallel-edge bundles matching the counts, whose only small
// cuts are exactly the small region unions.
struct AbstractCutProfile {
    static constexpr int A_ONLY = 0;
    static constexpr int B_ONLY = 1;
    static constexpr int BOTH = 2;
    static constexpr int OUTSIDE = 3;
    static constexpr unsigned SET_A = (1u << A_ONLY) | (1u << BOTH);
    static constexpr unsigned SET_B = (1u << B_ONLY) | (1u << BOTH);

    int k = 1;
    long counts[4][4] = {};

    AbstractCutProfile(int k_, long a_out, long b_out, long ab_out, long a_b, long a_ab, long b_ab) : k(k_) {
        auto put = [&](int i, int j, long c) {
            counts[i][j] = c;
            counts[j][i] = c;
        };
        put(A_ONLY, OUTSIDE, a_out);
        put(B_ONLY, OUTSIDE, b_out);
        put(BOTH, OUTSIDE, ab_out);
        put(A_ONLY, B_ONLY, a_b);
        put(A_ONLY, BOTH, a_ab);
        put(B_ONLY, BOTH, b_ab);
    }

    long cut_size(unsigned region_mask) const {
        long total = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                bool ci = (region_mask >> i) & 1u;
                bool cj = (region_mask >> j) & 1u;
                if (ci != cj) total += counts[i][j];
            }
        return total;
    }

    // Region pairs whose edges lie inside some small cut boundary.
    std::set<std::pair<int, int>> forced_pairs() const {
        std::set<std::pair<int, int>> pairs;
        for (unsigned mask = 1; mask < 15u; ++mask) {
            if (cut_size(mask) > k) continue;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    bool ci = (mask >> i) & 1u;
                    bool cj = (mask >> j) & 1u;
                    if (ci != cj && counts[i][j] > 0) pairs.insert({i, j});
                }
        }
        return pairs;
    }

    long forced_overlap(unsigned region_mask) const {
        auto pairs = forced_pairs();
        long total = 0;
        for (auto [i, j] : pairs) {
            bool ci = (region_mask >> i) & 1u;
            bool cj = (region_mask >> j) & 1u;
            if (ci != cj) total += counts[i][j];
        }
        return total;
    }

    long f_plain(unsigned region_mask) const { return std::min<long>(k, cut_size(region_mask)); }

    long f_forced(unsigned region_mask) const { return f_plain(region_mask) - forced_overlap(region_mask); }

    Multigraph realize() const {
        Multigraph g(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (long c = 0; c < counts[i][j]; ++c) g.add_edge(i, j, 1);
        return g;
    }
};

}  // namespace rsnd

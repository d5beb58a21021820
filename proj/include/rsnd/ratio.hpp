#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rsnd/iterative_rounding.hpp"
#include "rsnd/one_cut_reduction.hpp"
#include "rsnd/solver.hpp"
#include "rsnd/verify.hpp"

namespace rsnd {

enum class SolverKind { kefts_weighted, kefts_unweighted, rsnd2, rsnd3 };

inline const char* solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::kefts_weighted: return "kefts-weighted";
        case SolverKind::kefts_unweighted: return "kefts-unweighted";
        case SolverKind::rsnd2: return "rsnd2";
        case SolverKind::rsnd3: return "rsnd3-single";
    }
    throw internal_error("unknown solver kind");
}

inline std::optional<SolverKind> solver_from_name(const std::string& name) {
    for (auto kind : {SolverKind::kefts_weighted, SolverKind::kefts_unweighted, SolverKind::rsnd2,
                      SolverKind::rsnd3})
        if (name == solver_name(kind)) return kind;
    return std::nullopt;
}

// If the demand list covers every unordered node pair exactly once with one
// common k, return that k. The uniform solvers and the cut-based verifier
// only apply to this shape.
inline std::optional<int> uniform_all_pairs_k(const Instance& inst) {
    int n = inst.graph.node_count();
    if (n < 2) return std::nullopt;
    std::size_t want = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (inst.demands.size() != want) return std::nullopt;
    int k = inst.demands.front().k;
    std::set<std::pair<int, int>> seen;
    for (const auto& d : inst.demands) {
        if (d.k != k || d.s == d.t) return std::nullopt;
        if (d.s < 0 || d.s >= n || d.t < 0 || d.t >= n) return std::nullopt;
        if (!seen.insert({std::min(d.s, d.t), std::max(d.s, d.t)}).second) return std::nullopt;
    }
    return k;
}

// Proven worst-case factor of each solver against the exact optimum.
inline Rational ratio_bound(SolverKind kind, int k) {
    switch (kind) {
        case SolverKind::kefts_weighted: return 2;
        case SolverKind::kefts_unweighted:
            if (k < 1) throw std::invalid_argument("fault parameter must be >= 1");
            return Rational(k + 4, k);
        case SolverKind::rsnd2: return 2;
        case SolverKind::rsnd3: return Rational(27, 4);
    }
    throw internal_error("unknown solver kind");
}

inline EdgeSet run_solver(SolverKind kind, const Instance& inst) {
    switch (kind) {
        case SolverKind::kefts_weighted: {
            auto k = uniform_all_pairs_k(inst);
            if (!k) throw structural_error("this solver needs one demand per node pair with a common k");
            return kefts_weighted(inst.graph, *k);
        }
        case SolverKind::kefts_unweighted: {
            auto k = uniform_all_pairs_k(inst);
            if (!k) throw structural_error("this solver needs one demand per node pair with a common k");
            return kefts_unweighted(inst.graph, *k).edges;
        }
        case SolverKind::rsnd2:
            return rsnd2(inst.graph, inst.demands);
        case SolverKind::rsnd3:
            return rsnd3_single(inst.graph, inst.demands);
    }
    throw internal_error("unknown solver kind");
}

struct RatioReport {
    EdgeSet solution;
    Rational alg_cost = 0;
    Rational bound = 0;
    std::optional<Rational> opt_cost;  // absent when the subset budget ran out
    bool feasible = false;
    bool within = true;  // alg_cost <= bound * opt; vacuously true when opt is unknown
};

// Run a solver, verify its output against the enumeration oracle, and
// compare the cost to the exact optimum when the instance is small enough.
inline RatioReport run_and_compare(SolverKind kind, const Instance& inst,
                                   std::uint64_t max_subsets = (1ull << 18)) {
    RatioReport rep;
    rep.solution = run_solver(kind, inst);
    rep.alg_cost = inst.graph.total_weight(rep.solution);
    int kmax = 1;
    for (const auto& d : inst.demands) kmax = std::max(kmax, d.k);
    rep.bound = ratio_bound(kind, kmax);
    auto uniform = uniform_all_pairs_k(inst);
    if (uniform && (kind == SolverKind::kefts_weighted || kind == SolverKind::kefts_unweighted))
        rep.feasible = !verify_kefts(inst.graph, rep.solution, *uniform).has_value();
    else
        rep.feasible = !verify_rsnd(inst.graph, rep.solution, inst.demands).has_value();
    try {
        auto opt = exact_opt(inst.graph, inst.demands, max_subsets);
        rep.opt_cost = opt.cost;
        rep.within = rep.alg_cost <= rep.bound * opt.cost;
    } catch (const resource_error&) {
    }
    return rep;
}

}  // namespace rsnd

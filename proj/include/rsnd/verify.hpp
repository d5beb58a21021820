#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rsnd/multigraph.hpp"

namespace rsnd {

// Brute-force ground truth. A candidate subgraph H is feasible when, for
// every demand (s, t, k) and every fault set F with |F| < k, s and t being
// connected in G - F implies they are connected in H - F. The uniform
// all-pairs variant additionally doubles as a partition-equality check,
// since H - F always refines G - F.

struct Violation {
    int demand_index = -1;
    EdgeSet faults;
    int s = -1;
    int t = -1;
};

namespace detail {

// Component labels (root per node) for the subgraph with the given edge
// positions enabled.
inline void component_roots(const Multigraph& g, const std::vector<char>& edge_on, std::vector<int>& root) {
    int n = g.node_count();
    root.resize(static_cast<std::size_t>(n));
    Dsu dsu(n);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edge_on[i]) dsu.unite(edges[i].u, edges[i].v);
    for (int v = 0; v < n; ++v) root[static_cast<std::size_t>(v)] = dsu.find(v);
}

// Lexicographic combinations of {0..m-1} of a fixed size.
struct Combinations {
    int m;
    int size;
    std::vector<int> idx;
    bool done = false;
    Combinations(int m_, int size_) : m(m_), size(size_) {
        if (size > m) {
            done = true;
            return;
        }
        for (int i = 0; i < size; ++i) idx.push_back(i);
    }
    bool next() {
        if (done) return false;
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) {
            done = true;
            return false;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    }
};

}  // namespace detail

// Fault enumeration in canonical order (size ascending, then lexicographic by
// edge position); demands are checked in order for each fault set and the
// first violation wins. budget caps the number of elementary component
// computations.
inline std::optional<Violation> verify_rsnd(const Multigraph& g, const EdgeSet& h,
                                            const std::vector<Demand>& demands,
                                            long long budget = 10000000) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<char> in_h(static_cast<std::size_t>(m), 0);
    for (int id : h) {
        bool found = false;
        for (int i = 0; i < m; ++i)
            if (edges[static_cast<std::size_t>(i)].id == id) {
                in_h[static_cast<std::size_t>(i)] = 1;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("solution references unknown edge " + std::to_string(id));
    }
    int max_k = 0;
    for (const auto& d : demands) {
        g.check_node(d.s);
        g.check_node(d.t);
        if (d.s == d.t) throw std::invalid_argument("demand endpoints coincide");
        max_k = std::max(max_k, d.k);
    }
    long long ops = 0;
    std::vector<char> g_on(static_cast<std::size_t>(m)), h_on(static_cast<std::size_t>(m));
    std::vector<int> root_g, root_h;
    for (int size = 0; size < max_k && size <= m; ++size) {
        detail::Combinations comb(m, size);
        if (comb.done) continue;
        do {
            ops += 2 * (m + g.node_count()) + static_cast<long long>(demands.size());
            if (ops > budget) throw resource_error("verification budget exceeded");
            for (int i = 0; i < m; ++i) {
                g_on[static_cast<std::size_t>(i)] = 1;
                h_on[static_cast<std::size_t>(i)] = in_h[static_cast<std::size_t>(i)];
            }
            for (int pos : comb.idx) {
                g_on[static_cast<std::size_t>(pos)] = 0;
                h_on[static_cast<std::size_t>(pos)] = 0;
            }
            detail::component_roots(g, g_on, root_g);
            detail::component_roots(g, h_on, root_h);
            for (std::size_t di = 0; di < demands.size(); ++di) {
                const auto& d = demands[di];
                if (d.k <= size) continue;
                if (root_g[static_cast<std::size_t>(d.s)] != root_g[static_cast<std::size_t>(d.t)]) continue;
                if (root_h[static_cast<std::size_t>(d.s)] == root_h[static_cast<std::size_t>(d.t)]) continue;
                Violation v;
                v.demand_index = static_cast<int>(di);
                for (int pos : comb.idx) v.faults.insert(edges[static_cast<std::size_t>(pos)].id);
                v.s = d.s;
                v.t = d.t;
                return v;
            }
        } while (comb.next());
    }
    return std::nullopt;
}

// Uniform all-pairs variant; exploits that H - F refines G - F, so the
// partitions are identical iff the component counts match. The reported
// demand index refers to all_pairs_demands(n, k) ordering.
inline std::optional<Violation> verify_kefts(const Multigraph& g, const EdgeSet& h, int k,
                                             long long budget = 10000000) {
    if (k < 1) throw std::invalid_argument("fault parameter must be >= 1");
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    int n = g.node_count();
    std::vector<char> in_h(static_cast<std::size_t>(m), 0);
    for (int id : h) {
        bool found = false;
        for (int i = 0; i < m; ++i)
            if (edges[static_cast<std::size_t>(i)].id == id) {
                in_h[static_cast<std::size_t>(i)] = 1;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("solution references unknown edge " + std::to_string(id));
    }
    long long ops = 0;
    std::vector<char> g_on(static_cast<std::size_t>(m)), h_on(static_cast<std::size_t>(m));
    std::vector<int> root_g, root_h;
    for (int size = 0; size < k && size <= m; ++size) {
        detail::Combinations comb(m, size);
        if (comb.done) continue;
        do {
            ops += 2 * (m + n);
            if (ops > budget) throw resource_error("verification budget exceeded");
            for (int i = 0; i < m; ++i) {
                g_on[static_cast<std::size_t>(i)] = 1;
                h_on[static_cast<std::size_t>(i)] = in_h[static_cast<std::size_t>(i)];
            }
            for (int pos : comb.idx) {
                g_on[static_cast<std::size_t>(pos)] = 0;
                h_on[static_cast<std::size_t>(pos)] = 0;
            }
            detail::component_roots(g, g_on, root_g);
            detail::component_roots(g, h_on, root_h);
            int count_g = 0, count_h = 0;
            for (int v = 0; v < n; ++v) {
                count_g += root_g[static_cast<std::size_t>(v)] == v;
                count_h += root_h[static_cast<std::size_t>(v)] == v;
            }
            if (count_g == count_h) continue;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (root_g[static_cast<std::size_t>(u)] != root_g[static_cast<std::size_t>(v)]) continue;
                    if (root_h[static_cast<std::size_t>(u)] == root_h[static_cast<std::size_t>(v)]) continue;
                    Violation out;
                    out.s = u;
                    out.t = v;
                    for (int pos : comb.idx) out.faults.insert(edges[static_cast<std::size_t>(pos)].id);
                    int index = 0;
                    for (int a = 0; a < u; ++a) index += n - 1 - a;
                    out.demand_index = index + (v - u - 1);
                    return out;
                }
            throw internal_error("component counts differ but no witness pair found");
        } while (comb.next());
    }
    return std::nullopt;
}

struct OptResult {
    Rational cost = 0;
    EdgeSet edges;
};

// Exact optimum by exhaustive subset enumeration (gray-code order for cheap
// incremental costs). Ties are broken toward the lexicographically smallest
// ascending edge-id list. The subset count 2^m must fit the budget.
inline OptResult exact_opt(const Multigraph& g, const std::vector<Demand>& demands,
                           std::uint64_t max_subsets = (1ull << 18)) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    int n = g.node_count();
    if (m > 30 || (1ull << m) > max_subsets)
        throw resource_error("exact optimum over " + std::to_string(m) + " edges exceeds the subset budget");
    for (const auto& d : demands) {
        g.check_node(d.s);
        g.check_node(d.t);
        if (d.s == d.t) throw std::invalid_argument("demand endpoints coincide");
    }
    if (demands.empty()) return {};

    int max_k = 0;
    for (const auto& d : demands) max_k = std::max(max_k, d.k);

    // detect the uniform all-pairs shape for the fast partition-count path
    bool all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2 == demands.size();
    if (all_pairs)
        for (const auto& d : demands)
            if (d.k != max_k) {
                all_pairs = false;
                break;
            }
    if (all_pairs) {
        std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (const auto& d : demands) {
            int a = std::min(d.s, d.t), b = std::max(d.s, d.t);
            std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
            if (seen[key]) {
                all_pairs = false;
                break;
            }
            seen[key] = 1;
        }
    }

    struct Fault {
        std::uint32_t mask;
        std::vector<int> root_g;
        int comp_count;
        std::vector<char> demand_connected;  // generic path only
    };
    std::vector<Fault> faults;
    std::vector<char> g_on(static_cast<std::size_t>(m));
    for (int size = 0; size < max_k && size <= m; ++size) {
        detail::Combinations comb(m, size);
        if (comb.done) continue;
        do {
            Fault f;
            f.mask = 0;
            for (int pos : comb.idx) f.mask |= (1u << pos);
            for (int i = 0; i < m; ++i) g_on[static_cast<std::size_t>(i)] = !((f.mask >> i) & 1u);
            detail::component_roots(g, g_on, f.root_g);
            f.comp_count = 0;
            for (int v = 0; v < n; ++v) f.comp_count += f.root_g[static_cast<std::size_t>(v)] == v;
            if (!all_pairs) {
                f.demand_connected.resize(demands.size());
                for (std::size_t di = 0; di < demands.size(); ++di)
                    f.demand_connected[di] =
                        demands[di].k > size &&
                        f.root_g[static_cast<std::size_t>(demands[di].s)] ==
                            f.root_g[static_cast<std::size_t>(demands[di].t)];
            }
            faults.push_back(std::move(f));
        } while (comb.next());
    }

    auto ids_of = [&](std::uint32_t mask) {
        EdgeSet ids;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) ids.insert(edges[static_cast<std::size_t>(i)].id);
        return ids;
    };
    auto lex_smaller = [&](std::uint32_t a, std::uint32_t b) {
        EdgeSet ia = ids_of(a), ib = ids_of(b);
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    };

    std::uint32_t full = (m == 32) ? 0xffffffffu : ((1u << m) - 1u);
    std::uint32_t best_mask = full;
    Rational best_cost = 0;
    for (const auto& e : edges) best_cost += e.w;

    detail::Dsu scratch(n);
    std::vector<int> root_h(static_cast<std::size_t>(n));
    auto feasible = [&](std::uint32_t mask) {
        for (const auto& f : faults) {
            std::uint32_t on = mask & ~f.mask;
            scratch = detail::Dsu(n);
            for (int i = 0; i < m; ++i)
                if ((on >> i) & 1u)
                    scratch.unite(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
            if (all_pairs) {
                int count_h = 0;
                for (int v = 0; v < n; ++v) count_h += scratch.find(v) == v;
                if (count_h != f.comp_count) return false;
            } else {
                for (std::size_t di = 0; di < demands.size(); ++di) {
                    if (!f.demand_connected[di]) continue;
                    if (scratch.find(demands[di].s) != scratch.find(demands[di].t)) return false;
                }
            }
        }
        return true;
    };

    Rational run_cost = 0;
    std::uint32_t prev = 0;
    std::uint64_t total = 1ull << m;
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint32_t mask = static_cast<std::uint32_t>(i ^ (i >> 1));
        std::uint32_t diff = mask ^ prev;
        if (diff) {
            int b = 0;
            while (!((diff >> b) & 1u)) ++b;
            if ((mask >> b) & 1u)
                run_cost += edges[static_cast<std::size_t>(b)].w;
            else
                run_cost -= edges[static_cast<std::size_t>(b)].w;
        }
        prev = mask;
        if (run_cost > best_cost) continue;
        if (run_cost == best_cost && !lex_smaller(mask, best_mask)) continue;
        if (!feasible(mask)) continue;
        best_cost = run_cost;
        best_mask = mask;
    }
    return OptResult{best_cost, ids_of(best_mask)};
}

// Deterministic instance generator. All randomness flows through mt19937_64
// with plain modulo sampling, so a fixed seed reproduces byte-identical
// instances on any platform.
struct GenSpec {
    enum class DemandKind { all_pairs, single_pair, random_pairs };
    int n = 6;
    int edge_percent = 50;
    int parallel_percent = 0;
    int weight_lo = 1;
    int weight_hi = 1;
    int weight_max_den = 1;
    DemandKind kind = DemandKind::all_pairs;
    int k = 2;
    int pair_count = 3;
    int max_k = 2;
    std::uint64_t seed = 1;
    bool plant_two_cut = false;
};

inline Instance gen_random(const GenSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("need at least two nodes");
    if (spec.edge_percent < 0 || spec.edge_percent > 100) throw std::invalid_argument("bad edge probability");
    if (spec.weight_lo < 0 || spec.weight_hi < spec.weight_lo || spec.weight_max_den < 1)
        throw std::invalid_argument("bad weight range");
    std::mt19937_64 rng(spec.seed);
    auto below = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
    auto weight = [&]() {
        int num = spec.weight_lo + below(spec.weight_hi - spec.weight_lo + 1);
        int den = 1 + below(spec.weight_max_den);
        return Rational(num, den);
    };

    Instance inst;
    inst.graph = Multigraph(spec.n);
    int s_pick = -1, t_pick = -1;
    if (spec.plant_two_cut) {
        if (spec.n < 6) throw std::invalid_argument("planted instances need n >= 6");
        int n1 = spec.n / 2;
        int n2 = spec.n - n1;
        auto blob = [&](int base, int size) {
            std::vector<int> order(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) order[static_cast<std::size_t>(i)] = base + i;
            for (int i = size - 1; i > 0; --i)
                std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(below(i + 1))]);
            for (int i = 0; i < size; ++i)
                inst.graph.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % size)],
                                    weight());
            for (int a = 0; a < size; ++a)
                for (int b = a + 2; b < size; ++b) {
                    if (a == 0 && b == size - 1) continue;  // cycle already closes here
                    if (below(100) < spec.edge_percent)
                        inst.graph.add_edge(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)],
                                            weight());
                }
        };
        blob(0, n1);
        blob(n1, n2);
        for (int c = 0; c < 2; ++c) inst.graph.add_edge(below(n1), n1 + below(n2), weight());
        s_pick = below(n1);
        t_pick = n1 + below(n2);
    } else {
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v) {
                if (below(100) >= spec.edge_percent) continue;
                inst.graph.add_edge(u, v, weight());
                if (below(100) < spec.parallel_percent) inst.graph.add_edge(u, v, weight());
            }
    }

    switch (spec.kind) {
        case GenSpec::DemandKind::all_pairs:
            inst.demands = all_pairs_demands(spec.n, spec.k);
            break;
        case GenSpec::DemandKind::single_pair: {
            int s = s_pick >= 0 ? s_pick : below(spec.n);
            int t = t_pick >= 0 ? t_pick : below(spec.n);
            while (t == s) t = below(spec.n);
            inst.demands.push_back(Demand{s, t, spec.k});
            break;
        }
        case GenSpec::DemandKind::random_pairs:
            for (int i = 0; i < spec.pair_count; ++i) {
                int s = below(spec.n);
                int t = below(spec.n);
                while (t == s) t = below(spec.n);
                inst.demands.push_back(Demand{s, t, 1 + below(spec.max_k)});
            }
            break;
    }
    return inst;
}

}  // namespace rsnd

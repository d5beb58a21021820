#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rsnd/multigraph.hpp"

namespace rsnd {

// Primal-dual Steiner forest. Moats grow around the active components (those
// separating some pair); an edge fills at rate equal to its number of active
// endpoint components and is bought when the fill reaches its weight. One
// merge per iteration; simultaneous tight edges surface as zero-growth
// iterations, smallest edge id first. Reverse deletion then drops every
// bought edge the connectivity demands do not need. Factor 2 - 1/p for p
// pairs.
inline EdgeSet steiner_forest(const Multigraph& g, const std::vector<std::pair<int, int>>& pairs_in) {
    int n = g.node_count();
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());

    std::vector<std::pair<int, int>> pairs;
    {
        detail::Dsu whole(n);
        for (const auto& e : edges) whole.unite(e.u, e.v);
        for (auto [a, b] : pairs_in) {
            g.check_node(a);
            g.check_node(b);
            if (a == b) continue;
            if (whole.find(a) != whole.find(b))
                throw std::invalid_argument("pair " + std::to_string(a) + "," + std::to_string(b) +
                                            " is not connected in the graph");
            pairs.push_back({a, b});
        }
    }

    detail::Dsu comp(n);
    std::vector<Rational> filled(static_cast<std::size_t>(m), Rational(0));
    std::vector<char> picked(static_cast<std::size_t>(m), 0);
    std::vector<int> order;

    while (true) {
        std::vector<char> active(static_cast<std::size_t>(n), 0);
        bool any = false;
        for (auto [a, b] : pairs) {
            int ra = comp.find(a), rb = comp.find(b);
            if (ra == rb) continue;
            active[static_cast<std::size_t>(ra)] = 1;
            active[static_cast<std::size_t>(rb)] = 1;
            any = true;
        }
        if (!any) break;

        std::optional<Rational> delta;
        int best = -1;
        for (int i = 0; i < m; ++i) {
            const Edge& e = edges[static_cast<std::size_t>(i)];
            int ru = comp.find(e.u), rv = comp.find(e.v);
            if (ru == rv) continue;
            int rate = active[static_cast<std::size_t>(ru)] + active[static_cast<std::size_t>(rv)];
            if (rate == 0) continue;
            Rational need = (e.w - filled[static_cast<std::size_t>(i)]) / rate;
            if (!delta || need < *delta) {
                delta = need;
                best = i;
            }
        }
        if (!delta) throw internal_error("active component with no crossing edge");
        for (int i = 0; i < m; ++i) {
            const Edge& e = edges[static_cast<std::size_t>(i)];
            int ru = comp.find(e.u), rv = comp.find(e.v);
            if (ru == rv) continue;
            int rate = active[static_cast<std::size_t>(ru)] + active[static_cast<std::size_t>(rv)];
            if (rate == 0) continue;
            filled[static_cast<std::size_t>(i)] += *delta * rate;
        }
        if (filled[static_cast<std::size_t>(best)] != edges[static_cast<std::size_t>(best)].w)
            throw internal_error("bought edge is not tight");
        picked[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        comp.unite(edges[static_cast<std::size_t>(best)].u, edges[static_cast<std::size_t>(best)].v);
    }

    auto satisfied = [&](int skip) {
        detail::Dsu d(n);
        for (int i = 0; i < m; ++i) {
            if (!picked[static_cast<std::size_t>(i)] || i == skip) continue;
            d.unite(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
        }
        for (auto [a, b] : pairs)
            if (d.find(a) != d.find(b)) return false;
        return true;
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (satisfied(*it)) picked[static_cast<std::size_t>(*it)] = 0;

    EdgeSet out;
    for (int i = 0; i < m; ++i)
        if (picked[static_cast<std::size_t>(i)]) out.insert(edges[static_cast<std::size_t>(i)].id);
    return out;
}

}  // namespace rsnd

#pragma once

#include "rsnd/multigraph.hpp"

// Shared hand-checked graphs. Edge ids follow insertion order, so tests can
// refer to them by number.

namespace fixtures {

// complete graph on 4 nodes, unit weights; ids in pair order:
// 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
inline rsnd::Multigraph k4() {
    rsnd::Multigraph g(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, 1);
    return g;
}

// two complete blocks {0..3} and {4..7} joined by edges (2,4) id 12 and
// (3,5) id 13; exactly one 2-edge separator between the blocks
inline rsnd::Multigraph two_blocks() {
    rsnd::Multigraph g(8);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, 1);
    for (int u = 4; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) g.add_edge(u, v, 1);
    g.add_edge(2, 4, 1);
    g.add_edge(3, 5, 1);
    return g;
}

// triangles {0,1,2} and {3,4,5} tied by (1,3) and (2,4); the chain between
// 0 and 5 has regions {0}, {1,2}, {3,4}, {5}
inline rsnd::Multigraph two_triangles_chain() {
    rsnd::Multigraph g(6);
    g.add_edge(0, 1, 1);  // 0
    g.add_edge(0, 2, 1);  // 1
    g.add_edge(1, 2, 1);  // 2
    g.add_edge(3, 4, 1);  // 3
    g.add_edge(3, 5, 1);  // 4
    g.add_edge(4, 5, 1);  // 5
    g.add_edge(1, 3, 1);  // 6
    g.add_edge(2, 4, 1);  // 7
    return g;
}

// triangles {0,1,2} and {3,4,5} joined by the bridge (2,3) id 3
inline rsnd::Multigraph triangles_with_bridge() {
    rsnd::Multigraph g(6);
    g.add_edge(0, 1, 1);  // 0
    g.add_edge(0, 2, 1);  // 1
    g.add_edge(1, 2, 1);  // 2
    g.add_edge(2, 3, 1);  // 3 bridge
    g.add_edge(3, 4, 1);  // 4
    g.add_edge(3, 5, 1);  // 5
    g.add_edge(4, 5, 1);  // 6
    return g;
}

// path 0-1-2-3, unit weights
inline rsnd::Multigraph path4() {
    rsnd::Multigraph g(4);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    return g;
}

inline rsnd::EdgeSet all_ids(const rsnd::Multigraph& g) {
    rsnd::EdgeSet ids;
    for (const auto& e : g.edges()) ids.insert(e.id);
    return ids;
}

}  // namespace fixtures

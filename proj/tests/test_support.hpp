#pragma once

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "pairsolve/core_ops.hpp"
#include "pairsolve/demand_graph.hpp"

namespace pairsolve {

inline DemandGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    DemandGraph g(n);
    OriginId o = 0;
    for (auto [u, v] : pairs) g.add_edge(u, v, o++);
    return g;
}

inline Session session_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    return make_session(graph_from_pairs(n, pairs));
}

inline std::multiset<std::pair<int, int>> live_pairs(const DemandGraph& g) {
    std::multiset<std::pair<int, int>> out;
    for (EdgeId e : g.live_edge_ids()) {
        VertexPair p = g.edge(e).pair();
        out.insert({p.lo, p.hi});
    }
    return out;
}

// the 7-edge figure instance: bundles (0,1)x3, (0,2)x2, (1,2)x2 on n = 6
inline DemandGraph fig4_instance() {
    return graph_from_pairs(6, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}});
}

// All loopless multigraphs of maximum degree <= 2 on n labeled vertices:
// disjoint unions of isolated vertices, single edges, C_2s, longer paths and
// cycles. Paths are canonical with first endpoint < last, cycles start at
// their smallest vertex with second < last.
void enumerate_le2_multigraphs(int n,
                               const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

} // namespace pairsolve

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pairsolve/demand_graph.hpp"
#include "pairsolve/route_ledger.hpp"

namespace pairsolve {

// A demand graph plus the ledger tracking its route walks. One session is
// owned by one solving run; sessions are independent.
struct Session {
    DemandGraph g;
    RouteLedger ledger;

    explicit Session(int n) : g(n) {}
};

// Fresh session whose origins are the live edges of `instance` in id order.
Session make_session(const DemandGraph& instance);

OriginId add_demand(Session& s, Vertex u, Vertex v);
OriginId add_dummy_demand(Session& s, Vertex u, Vertex v);

// Substitute edge e = {u,v} by the two-edge path u-w-v. Raises d(w) by 2 and
// leaves every other degree unchanged. Returns the ids of (u,w) and (w,v).
std::pair<EdgeId, EdgeId> lift(DemandGraph& g, RouteLedger& ledger, EdgeId e, Vertex w);

struct LiftRecord {
    EdgeId lifted = -1;
    Vertex target = -1;
    EdgeId first = -1;
    EdgeId second = -1;
};

// For every neighbor u of v carrying k >= 2 parallel edges, lift k-1 of them,
// each to a distinct element of allowed_targets, until m(v) = 0. Targets are
// assigned in ascending vertex order to lifted edges in ascending id order.
// keep_preference, when given, selects which parallel edge survives unlifted
// (smallest id among those preferred, else smallest id).
std::vector<LiftRecord> resolve_multiplicities_at(
    DemandGraph& g, RouteLedger& ledger, Vertex v, std::span<const Vertex> allowed_targets,
    const std::function<bool(EdgeId)>& keep_preference = {});

// Commit the simple star of x as direct K_n edges and remove them from the
// pending graph; x ends up isolated. Requires m(x) = 0.
std::vector<VertexPair> finalize_vertex(DemandGraph& g, RouteLedger& ledger, Vertex x);

// Lexicographically smallest triple of pairwise non-adjacent vertices among
// `candidates` (ascending). Guaranteed to exist when 2*max_degree + 3 <= n.
std::optional<std::array<Vertex, 3>> independent_triple(const DemandGraph& g,
                                                        std::span<const Vertex> candidates);
std::optional<std::array<Vertex, 3>> independent_triple(const DemandGraph& g);

} // namespace pairsolve

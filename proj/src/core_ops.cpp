#include "pairsolve/core_ops.hpp"

#include <algorithm>
#include <set>

namespace pairsolve {

Session make_session(const DemandGraph& instance) {
    Session s(instance.vertex_count());
    for (EdgeId e : instance.live_edge_ids()) {
        const DemandEdge& de = instance.edge(e);
        add_demand(s, de.u, de.v);
    }
    return s;
}

OriginId add_demand(Session& s, Vertex u, Vertex v) {
    OriginId o = s.ledger.origin_count();
    EdgeId e = s.g.add_edge(u, v, o);
    return s.ledger.add_origin(u, v, OriginKind::Real, e);
}

OriginId add_dummy_demand(Session& s, Vertex u, Vertex v) {
    OriginId o = s.ledger.origin_count();
    EdgeId e = s.g.add_edge(u, v, o);
    return s.ledger.add_origin(u, v, OriginKind::Dummy, e);
}

std::pair<EdgeId, EdgeId> lift(DemandGraph& g, RouteLedger& ledger, EdgeId e, Vertex w) {
    if (!g.is_live(e)) throw PreconditionError("lift: edge id " + std::to_string(e) + " not live");
    DemandEdge de = g.edge(e);
    if (w == de.u || w == de.v)
        throw PreconditionError("lift: target " + std::to_string(w) +
                                " is an endpoint (would create a loop)");
    g.remove_edge(e);
    EdgeId first = g.add_edge(de.u, w, de.origin);
    EdgeId second = g.add_edge(w, de.v, de.origin);
    ledger.replace_with_lift(e, first, second, w);
    return {first, second};
}

std::vector<LiftRecord> resolve_multiplicities_at(
    DemandGraph& g, RouteLedger& ledger, Vertex v, std::span<const Vertex> allowed_targets,
    const std::function<bool(EdgeId)>& keep_preference) {
    std::vector<Vertex> targets(allowed_targets.begin(), allowed_targets.end());
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (Vertex t : targets)
        if (t == v || g.adjacent(v, t))
            throw PreconditionError("resolve_multiplicities_at: target " + std::to_string(t) +
                                    " is " + (t == v ? "the vertex itself" : "a neighbor of v"));

    int m = multiplicity(g, v);
    if (static_cast<int>(targets.size()) < m)
        throw PreconditionError("resolve_multiplicities_at: insufficient targets, deficit " +
                                std::to_string(m - static_cast<int>(targets.size())));

    // every bundle keeps one edge; the rest are lifted in ascending id order
    std::vector<EdgeId> to_lift;
    for (Vertex u : g.neighbors(v)) {
        std::vector<EdgeId> ids = g.pair_edge_ids(v, u);
        if (ids.size() < 2) continue;
        EdgeId keep = ids.front();
        if (keep_preference) {
            for (EdgeId e : ids)
                if (keep_preference(e)) {
                    keep = e;
                    break;
                }
        }
        for (EdgeId e : ids)
            if (e != keep) to_lift.push_back(e);
    }
    std::sort(to_lift.begin(), to_lift.end());

    std::vector<LiftRecord> records;
    std::size_t next_target = 0;
    for (EdgeId e : to_lift) {
        Vertex t = targets[next_target++];
        auto [a, b] = lift(g, ledger, e, t);
        records.push_back(LiftRecord{e, t, a, b});
    }
    if (multiplicity(g, v) != 0)
        throw InternalError("resolve_multiplicities_at left m(v) > 0 at vertex " +
                            std::to_string(v));
    return records;
}

std::vector<VertexPair> finalize_vertex(DemandGraph& g, RouteLedger& ledger, Vertex x) {
    if (multiplicity(g, x) != 0)
        throw PreconditionError("finalize_vertex: m(" + std::to_string(x) + ") = " +
                                std::to_string(multiplicity(g, x)) + " > 0");
    std::vector<VertexPair> committed;
    for (EdgeId e : g.incident_edge_ids(x)) {
        committed.push_back(g.edge(e).pair());
        ledger.finalize_edge(e);
        g.remove_edge(e);
    }
    return committed;
}

std::optional<std::array<Vertex, 3>> independent_triple(const DemandGraph& g,
                                                        std::span<const Vertex> candidates) {
    std::vector<Vertex> cs(candidates.begin(), candidates.end());
    std::sort(cs.begin(), cs.end());
    const int k = static_cast<int>(cs.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(cs[i], cs[j])) continue;
            for (int l = j + 1; l < k; ++l)
                if (!g.adjacent(cs[i], cs[l]) && !g.adjacent(cs[j], cs[l]))
                    return std::array<Vertex, 3>{cs[i], cs[j], cs[l]};
        }
    return std::nullopt;
}

std::optional<std::array<Vertex, 3>> independent_triple(const DemandGraph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
    return independent_triple(g, all);
}

} // namespace pairsolve

#include "pairsolve/solver_sparse.hpp"

#include <algorithm>
#include <set>

#include "pairsolve/instance_io.hpp"
#include "pairsolve/oracle.hpp"

namespace pairsolve {

namespace {

// one direct edge kept, the k-1 others lifted to distinct helpers and the
// bundle committed on the spot (both endpoints finalized)
std::vector<Vertex> route_bundle(Session& s, const std::vector<Vertex>& active, Vertex u,
                                 Vertex v) {
    DemandGraph& g = s.g;
    int k = g.pair_count(u, v);
    std::vector<Vertex> helpers;
    for (Vertex w : active) {
        if (static_cast<int>(helpers.size()) == k - 1) break;
        if (w == u || w == v) continue;
        if (g.adjacent(u, w) || g.adjacent(v, w)) continue;
        if (s.ledger.pair_finalized({u, w}) || s.ledger.pair_finalized({w, v})) continue;
        helpers.push_back(w);
    }
    if (static_cast<int>(helpers.size()) != k - 1)
        throw InternalError("helper exhaustion while routing a bundle", instance_to_text(g));
    resolve_multiplicities_at(g, s.ledger, u, helpers);
    finalize_vertex(g, s.ledger, u);
    finalize_vertex(g, s.ledger, v);
    return helpers;
}

// resolve all multiplicities of x into non-neighbors below the degree cap,
// then finalize and delete x
void delete_vertex(Session& s, std::vector<Vertex>& active, Vertex x) {
    DemandGraph& g = s.g;
    const int n = static_cast<int>(active.size());
    std::vector<Vertex> targets;
    for (Vertex v : active) {
        if (v == x || g.adjacent(x, v)) continue;
        if (g.degree(v) >= n - 2) continue; // a lift would push it past n'-1
        targets.push_back(v);
    }
    try {
        resolve_multiplicities_at(g, s.ledger, x, targets);
    } catch (const PreconditionError& err) {
        throw InternalError(std::string("vertex deletion ran out of lift targets: ") + err.what(),
                            instance_to_text(g));
    }
    finalize_vertex(g, s.ledger, x);
    std::erase(active, x);
}

void delegate_to_oracle(Session& s, const std::vector<Vertex>& active) {
    DemandGraph& g = s.g;
    std::set<VertexPair> reserved;
    for (const auto& [p, cnt] : s.ledger.finalized_pair_counts()) reserved.insert(p);
    SearchBudget budget;
    budget.node_limit = 2'000'000'000ULL;
    budget.time_limit = std::chrono::milliseconds(120'000);
    OracleOutcome out = brute_force_resolve(g, reserved, budget, active);
    if (out.status != OracleStatus::Feasible)
        throw InternalError("base-case search failed on an instance the bound guarantees",
                            instance_to_text(g));
    for (const auto& [e, path] : out.paths) {
        s.ledger.finalize_slot_with_path(e, path);
        g.remove_edge(e);
    }
}

} // namespace

int pad_to_exact(Session& s, const std::vector<Vertex>& active) {
    DemandGraph& g = s.g;
    const int n = static_cast<int>(active.size());
    int added = 0;
    // adding a dummy never makes a lexicographically earlier pair eligible,
    // so one ascending sweep finds every pick the repeated rescan would
    for (std::size_t i = 0; i < active.size() && g.live_edge_count() < 2 * n - 5; ++i) {
        Vertex u = active[i];
        for (std::size_t j = i + 1; j < active.size() && g.live_edge_count() < 2 * n - 5; ++j) {
            Vertex v = active[j];
            if (g.degree(u) >= n - 1) break;
            if (g.degree(v) >= n - 1 || g.adjacent(u, v)) continue;
            add_dummy_demand(s, u, v);
            ++added;
        }
    }
    // an incomplete pad is fine; the casework needs only <= 2n-5
    return added;
}

std::vector<Vertex> compute_B(const DemandGraph& g, const std::vector<Vertex>& active) {
    const int n = static_cast<int>(active.size());
    std::vector<Vertex> b;
    for (Vertex v : active)
        if (g.degree(v) >= n - 2) b.push_back(v);
    std::sort(b.begin(), b.end());
    return b;
}

CaseTag inductive_step(Session& s, std::vector<Vertex>& active) {
    DemandGraph& g = s.g;
    const int n = static_cast<int>(active.size());
    if (n < 7) throw PreconditionError("inductive step needs at least 7 vertices");

    CaseTag tag;
    tag.zs = compute_B(g, active);
    const std::vector<Vertex>& B = tag.zs;
    std::set<Vertex> bset(B.begin(), B.end());

    if (B.size() > 3)
        throw InternalError("more than 3 high-degree vertices under the edge budget",
                            instance_to_text(g));

    switch (B.size()) {
    case 0: {
        Vertex x = -1;
        int best_gamma = 0;
        for (Vertex v : active)
            if (g.gamma(v) > best_gamma) {
                best_gamma = g.gamma(v);
                x = v;
            }
        if (best_gamma >= 2) {
            tag.kind = SparseCase::B0Pick;
            tag.x = x;
            delete_vertex(s, active, x);
        } else {
            tag.kind = SparseCase::B0Trivial;
            // disjoint bundles and isolated vertices
            for (Vertex u : active) {
                if (g.degree(u) == 0) continue;
                Vertex v = g.neighbors(u).front();
                if (v < u) continue; // handled from the smaller endpoint
                if (g.pair_count(u, v) >= 2) {
                    auto helpers = route_bundle(s, active, u, v);
                    tag.helpers.insert(tag.helpers.end(), helpers.begin(), helpers.end());
                } else {
                    finalize_vertex(g, s.ledger, u);
                }
            }
        }
        break;
    }
    case 1: {
        tag.kind = SparseCase::B1;
        tag.x = B[0];
        if (g.gamma(B[0]) < 2)
            throw InternalError("single high-degree vertex with one neighbor implies a "
                                "second high-degree vertex",
                                instance_to_text(g));
        delete_vertex(s, active, B[0]);
        break;
    }
    case 2: {
        Vertex z1 = B[0], z2 = B[1];
        if (!g.adjacent(z1, z2))
            throw InternalError("the two high-degree vertices must be adjacent",
                                instance_to_text(g));
        Vertex outside_z = -1;
        for (Vertex z : B) {
            bool has_outside = false;
            for (Vertex w : g.neighbors(z))
                if (!bset.count(w)) has_outside = true;
            if (has_outside) {
                outside_z = z;
                break;
            }
        }
        if (outside_z != -1) {
            tag.kind = SparseCase::B2Outside;
            tag.x = outside_z;
            delete_vertex(s, active, outside_z);
        } else {
            tag.kind = SparseCase::B2Bundle;
            // the pair's star is one bare bundle; lifting k-1 edges leaves
            // both stars simple, so both vertices go at once. Deleting only
            // one would leave 2n-6 edges, one above the inductive budget
            tag.helpers = route_bundle(s, active, z1, z2);
            std::erase(active, z1);
            std::erase(active, z2);
        }
        break;
    }
    case 3: {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!g.adjacent(B[i], B[j]))
                    throw InternalError("the three high-degree vertices must be pairwise "
                                        "adjacent",
                                        instance_to_text(g));
        Vertex x = -1;
        for (Vertex v : active)
            if (g.degree(v) == 0) {
                x = v;
                break;
            }
        if (x == -1)
            throw InternalError("average degree guarantees an isolated vertex",
                                instance_to_text(g));
        tag.x = x;

        int outside_incident = 0;
        EdgeId outside_internal = -1, boundary = -1;
        for (EdgeId id : g.live_edge_ids()) {
            const DemandEdge& de = g.edge(id);
            bool bu = bset.count(de.u) > 0, bv = bset.count(de.v) > 0;
            if (bu != bv) {
                ++outside_incident;
                if (boundary == -1) boundary = id;
            }
            if (!bu && !bv && outside_internal == -1) outside_internal = id;
        }

        if (outside_incident == 0) {
            if (outside_internal == -1) {
                // every edge lives inside the triangle, which forces n <= 7;
                // hand the whole remainder to the exhaustive resolver
                if (n > 7)
                    throw InternalError("edge budget contradiction: all edges inside the "
                                        "triangle on n > 7",
                                        instance_to_text(g));
                tag.kind = SparseCase::B3InternalOracle;
                break;
            }
            tag.kind = SparseCase::B3Internal;
            tag.f = outside_internal;
            // two in-triangle edges from different pairs cover all three
            // vertices; together with f they meet at x with one multiplicity
            EdgeId e1 = -1, e2 = -1;
            for (EdgeId id : g.live_edge_ids()) {
                const DemandEdge& de = g.edge(id);
                if (!bset.count(de.u) || !bset.count(de.v)) continue;
                if (e1 == -1) {
                    e1 = id;
                } else if (g.edge(e1).pair() != de.pair()) {
                    e2 = id;
                    break;
                }
            }
            if (e2 == -1)
                throw InternalError("triangle edges span fewer than two pairs",
                                    instance_to_text(g));
            tag.e = e1;
            lift(g, s.ledger, e1, x);
            lift(g, s.ledger, e2, x);
            VertexPair fp = g.edge(outside_internal).pair();
            lift(g, s.ledger, outside_internal, x);
            Vertex w = -1;
            for (Vertex v : active) {
                if (v == x || bset.count(v) || g.adjacent(x, v)) continue;
                if (v == fp.lo || v == fp.hi) continue;
                w = v;
                break;
            }
            if (w == -1)
                throw InternalError("no lift target left for the doubled edge at x",
                                    instance_to_text(g));
            std::array<Vertex, 1> t{w};
            resolve_multiplicities_at(g, s.ledger, x, t);
            tag.helpers.push_back(w);
            finalize_vertex(g, s.ledger, x);
            std::erase(active, x);
        } else {
            tag.kind = SparseCase::B3Outside;
            tag.f = boundary;
            const DemandEdge& fe = g.edge(boundary);
            Vertex zf = bset.count(fe.u) ? fe.u : fe.v;
            std::vector<Vertex> others;
            for (Vertex z : B)
                if (z != zf) others.push_back(z);
            std::vector<EdgeId> pair_ids = g.pair_edge_ids(others[0], others[1]);
            tag.e = pair_ids.front();
            // e and f are disjoint, so x picks up no multiplicity
            lift(g, s.ledger, boundary, x);
            lift(g, s.ledger, tag.e, x);
            finalize_vertex(g, s.ledger, x);
            std::erase(active, x);
        }
        break;
    }
    default:
        throw InternalError("unreachable case selection", instance_to_text(g));
    }
    return tag;
}

void solve_sparse(Session& s, const StepObserver& observer) {
    DemandGraph& g = s.g;
    const int n = g.vertex_count();
    if (g.live_edge_count() > 0 && g.live_edge_count() > 2 * n - 5)
        throw PreconditionError("edge count exceeds 2n-5");
    if (g.max_degree() > n - 1) throw PreconditionError("max degree exceeds n-1");

    std::vector<Vertex> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    while (g.live_edge_count() > 0) {
        if (active.size() <= 6) {
            delegate_to_oracle(s, active);
            break;
        }
        pad_to_exact(s, active);
        CaseTag tag = inductive_step(s, active);
        if (observer) observer(g, active, tag);
        if (tag.kind == SparseCase::B0Trivial) break;
        if (tag.kind == SparseCase::B3InternalOracle) {
            delegate_to_oracle(s, active);
            break;
        }
    }
    if (!s.ledger.fully_finalized())
        throw InternalError("sparse pipeline left live edges", instance_to_text(g));
}

} // namespace pairsolve

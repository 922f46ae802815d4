#include "pairsolve/solver_regular.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "pairsolve/instance_io.hpp"
#include "pairsolve/lifting_coloring.hpp"

namespace pairsolve {

namespace {

int max_degree_on(const DemandGraph& g, const std::vector<Vertex>& active) {
    int d = 0;
    for (Vertex v : active) d = std::max(d, g.degree(v));
    return d;
}

bool adjacent_minus(const DemandGraph& g, const SubFactor& excluded, Vertex a, Vertex b) {
    for (EdgeId e : g.pair_edge_ids(a, b))
        if (!excluded.contains(e)) return true;
    return false;
}

} // namespace

void regularize(Session& s, const std::vector<Vertex>& active, int r) {
    DemandGraph& g = s.g;
    if (r % 2 != 0) throw PreconditionError("regularize: target degree must be even");
    if (max_degree_on(g, active) > r)
        throw PreconditionError("regularize: a vertex already exceeds the target degree");

    while (true) {
        std::vector<Vertex> deficient;
        for (Vertex v : active)
            if (g.degree(v) < r) deficient.push_back(v);
        if (deficient.empty()) return;
        if (deficient.size() >= 2) {
            add_dummy_demand(s, deficient[0], deficient[1]);
            continue;
        }
        // single deficient vertex: its deficit is even; lift edges of the
        // rest of the graph onto it
        Vertex v = deficient[0];
        while (g.degree(v) < r) {
            EdgeId pick = -1;
            for (EdgeId e : g.live_edge_ids()) {
                const DemandEdge& de = g.edge(e);
                if (de.u != v && de.v != v) {
                    pick = e;
                    break;
                }
            }
            if (pick == -1)
                throw InternalError("regularize: no edge available to lift onto the last "
                                    "deficient vertex",
                                    instance_to_text(g));
            lift(g, s.ledger, pick, v);
        }
        return;
    }
}

void apply_reduction_round(Session& s, std::vector<Vertex>& active,
                           const std::array<Vertex, 3>& X, std::span<const Vertex> avoid_set,
                           const SubFactor& F) {
    DemandGraph& g = s.g;
    const int n = static_cast<int>(active.size());
    std::set<Vertex> active_set(active.begin(), active.end());
    std::set<Vertex> avoid(avoid_set.begin(), avoid_set.end());
    if (avoid.size() > 3) throw PreconditionError("avoid set larger than 3");
    for (Vertex x : X)
        if (!active_set.count(x)) throw PreconditionError("X vertex not active");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (X[i] == X[j] || g.adjacent(X[i], X[j]))
                throw PreconditionError("X is not an independent triple");
    for (Vertex b : avoid)
        if (!active_set.count(b) || b == X[0] || b == X[1] || b == X[2])
            throw PreconditionError("avoid set must live outside X in the active set");
    if (max_degree_on(g, active) > n / 3 - 4)
        throw PreconditionError("degree hypothesis violated: max degree > n/3 - 4");

    // pins realize c(x_i) = i+1 (mod 3); this is what keeps the X-internal
    // lifted edges simple: a doubled X-edge would need j = i+1 and i = j+1
    // simultaneously, impossible mod 3
    std::array<Vertex, 3> pins{X[2], X[0], X[1]};
    LiftingColoring col = balanced_lifting_coloring(g, F, active, pins);

    // phase 1: lift every F-edge f to the X-vertex of f's color, except when
    // f is already incident to it
    std::set<EdgeId> lifted_pairs; // F' = the lifted edge copies
    for (EdgeId f : F.edges()) {
        int color = col.edge_color.at(f);
        Vertex x = X[color - 1];
        const DemandEdge& de = g.edge(f);
        if (de.u == x || de.v == x) continue;
        auto [a, b] = lift(g, s.ledger, f, x);
        lifted_pairs.insert(a);
        lifted_pairs.insert(b);
    }

    // phase 2: resolve the multiplicities of each X-vertex inside its own
    // color class, keeping lifted copies and never touching the avoid set
    for (int i = 0; i < 3; ++i) {
        Vertex x = X[i];
        std::vector<Vertex> targets;
        for (Vertex v : active) {
            if (v == X[0] || v == X[1] || v == X[2]) continue;
            if (avoid.count(v)) continue;
            auto it = col.vertex_color.find(v);
            if (it == col.vertex_color.end() || it->second != i + 1) continue;
            if (g.adjacent(x, v)) continue;
            targets.push_back(v);
        }
        try {
            resolve_multiplicities_at(g, s.ledger, x, targets,
                                      [&](EdgeId e) { return lifted_pairs.count(e) > 0; });
        } catch (const PreconditionError& err) {
            throw InternalError(std::string("target color class exhausted: ") + err.what(),
                                instance_to_text(g));
        }
    }

    for (Vertex x : X)
        for (Vertex u : g.neighbors(x))
            if (g.pair_count(x, u) > 1)
                throw InternalError("multi-edge survived at a removed vertex",
                                    instance_to_text(g));

    for (Vertex x : X) finalize_vertex(g, s.ledger, x);
    std::erase_if(active, [&](Vertex v) { return v == X[0] || v == X[1] || v == X[2]; });
}

ReductionPlan choose_plan(const DemandGraph& g, const std::vector<Vertex>& active) {
    const int n = static_cast<int>(active.size());
    if (n < 24) throw PreconditionError("choose_plan needs at least 24 active vertices");
    int r = g.degree(active[0]);
    for (Vertex v : active)
        if (g.degree(v) != r) throw PreconditionError("choose_plan needs a regular graph");
    if (r < 4 || r % 2 != 0) throw PreconditionError("choose_plan needs even degree >= 4");

    ReductionPlan plan;
    auto triple = independent_triple(g, active);
    if (!triple) throw InternalError("no independent triple in a sparse regular graph",
                                     instance_to_text(g));
    plan.X = *triple;

    std::vector<SubFactor> factors = petersen_decompose(g);
    plan.A1 = factors[0];
    plan.A2 = factors[1];

    std::set<Vertex> xs(plan.X.begin(), plan.X.end());
    std::vector<Vertex> Y;
    for (Vertex v : active)
        if (!xs.count(v)) Y.push_back(v);
    std::set<Vertex> yset(Y.begin(), Y.end());

    SubFactor seed;
    for (EdgeId e : plan.A2.edges()) {
        const DemandEdge& de = g.edge(e);
        if (yset.count(de.u) && yset.count(de.v)) seed.add(g, e);
    }
    std::vector<EdgeId> candidates;
    for (EdgeId e : g.live_edge_ids()) {
        const DemandEdge& de = g.edge(e);
        if (plan.A1.contains(e)) continue;
        if (yset.count(de.u) && yset.count(de.v)) candidates.push_back(e);
    }
    plan.F2 = extend_to_maximal_le2_factor(g, seed, candidates);

    // F2's path components: degree-0 vertices are their own components;
    // degree-1 vertices pair up along paths
    std::vector<Vertex> deg0, deg1;
    for (Vertex v : Y) {
        if (plan.F2.degree(v) == 0) deg0.push_back(v);
        if (plan.F2.degree(v) == 1) deg1.push_back(v);
    }
    std::map<Vertex, Vertex> other_end; // path endpoint -> opposite endpoint
    {
        std::map<Vertex, std::vector<std::pair<Vertex, EdgeId>>> fadj;
        for (EdgeId e : plan.F2.edges()) {
            const DemandEdge& de = g.edge(e);
            fadj[de.u].emplace_back(de.v, e);
            fadj[de.v].emplace_back(de.u, e);
        }
        std::set<Vertex> seen;
        for (Vertex v : deg1) {
            if (seen.count(v)) continue;
            Vertex at = v;
            std::set<EdgeId> used;
            while (true) {
                EdgeId nxt = -1;
                Vertex to = -1;
                for (auto [w, e] : fadj[at])
                    if (!used.count(e)) {
                        nxt = e;
                        to = w;
                        break;
                    }
                if (nxt == -1) break;
                used.insert(nxt);
                at = to;
            }
            seen.insert(v);
            seen.insert(at);
            other_end[v] = at;
            other_end[at] = v;
        }
    }

    auto build_b1 = [&]() -> std::optional<std::array<Vertex, 3>> {
        std::vector<Vertex> b1 = deg0;
        if (b1.size() > 3) return std::nullopt;
        std::set<Vertex> taken_ends;
        for (Vertex v : deg1) {
            if (b1.size() >= 3) break;
            if (taken_ends.count(v)) continue;
            b1.push_back(v);
            taken_ends.insert(v);
            taken_ends.insert(other_end.at(v));
        }
        for (Vertex v : Y) {
            if (b1.size() >= 3) break;
            if (std::find(b1.begin(), b1.end(), v) != b1.end()) continue;
            bool clash = false;
            for (Vertex b : b1)
                if (adjacent_minus(g, plan.A1, v, b)) clash = true;
            if (!clash) b1.push_back(v);
        }
        if (b1.size() != 3) return std::nullopt;
        std::sort(b1.begin(), b1.end());
        return std::array<Vertex, 3>{b1[0], b1[1], b1[2]};
    };

    auto finish = [&](const std::array<Vertex, 3>& b1) {
        plan.B1 = b1;
        plan.B2.clear();
        for (Vertex v : deg1)
            if (v != b1[0] && v != b1[1] && v != b1[2]) plan.B2.push_back(v);
    };

    if (auto b1 = build_b1()) {
        finish(*b1);
        if (validate_plan(g, active, plan).empty()) return plan;
    }

    // fallback: exhaustive scan over candidate triples
    for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = i + 1; j < Y.size(); ++j)
            for (std::size_t k = j + 1; k < Y.size(); ++k) {
                finish({Y[i], Y[j], Y[k]});
                if (validate_plan(g, active, plan).empty()) return plan;
            }
    throw InternalError("no valid avoid-triple exists for the second reduction",
                        instance_to_text(g));
}

std::vector<std::string> validate_plan(const DemandGraph& g, const std::vector<Vertex>& active,
                                       const ReductionPlan& plan) {
    std::vector<std::string> problems;
    std::set<Vertex> xs(plan.X.begin(), plan.X.end());
    std::set<Vertex> b1(plan.B1.begin(), plan.B1.end());
    std::set<Vertex> active_set(active.begin(), active.end());

    if (xs.size() != 3) problems.push_back("X has repeated vertices");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.adjacent(plan.X[i], plan.X[j])) problems.push_back("X is not independent");

    if (b1.size() != 3) problems.push_back("B1 has repeated vertices");
    for (Vertex b : b1)
        if (!active_set.count(b) || xs.count(b)) problems.push_back("B1 leaves V minus X");
    for (Vertex a : b1)
        for (Vertex b : b1)
            if (a < b && adjacent_minus(g, plan.A1, a, b))
                problems.push_back("B1 induces an edge outside A1");

    for (Vertex v : active) {
        if (xs.count(v)) continue;
        int d = plan.F2.degree(v);
        if (d == 0 && !b1.count(v))
            problems.push_back("F2-isolated vertex " + std::to_string(v) + " missing from B1");
    }
    std::vector<Vertex> b2_expect;
    for (Vertex v : active)
        if (!xs.count(v) && !b1.count(v) && plan.F2.degree(v) == 1) b2_expect.push_back(v);
    if (b2_expect != plan.B2) problems.push_back("B2 is not the leftover degree-1 set");
    if (plan.B2.size() > 3) problems.push_back("B2 larger than 3");

    for (EdgeId e : plan.F2.edges()) {
        const DemandEdge& de = g.edge(e);
        if (plan.A1.contains(e)) problems.push_back("F2 intersects A1");
        if (xs.count(de.u) || xs.count(de.v)) problems.push_back("F2 touches X");
    }
    return problems;
}

void base_case_small(Session& s, const std::vector<Vertex>& active) {
    DemandGraph& g = s.g;
    if (max_degree_on(g, active) > 2)
        throw PreconditionError("base case requires max degree <= 2");

    // components of the pending graph, ascending by smallest vertex
    std::set<Vertex> visited;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : active) {
        if (visited.count(v) || g.degree(v) == 0) continue;
        std::vector<Vertex> comp, stack{v};
        visited.insert(v);
        while (!stack.empty()) {
            Vertex at = stack.back();
            stack.pop_back();
            comp.push_back(at);
            for (Vertex w : g.neighbors(at))
                if (!visited.count(w)) {
                    visited.insert(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    std::set<Vertex> helpers_used;
    for (const std::vector<Vertex>& comp : comps) {
        bool is_bundle = comp.size() == 2 && g.pair_count(comp[0], comp[1]) == 2;
        if (is_bundle) {
            Vertex u = comp[0], v = comp[1];
            Vertex helper = -1;
            for (Vertex w : active) {
                if (w == u || w == v || helpers_used.count(w)) continue;
                if (g.adjacent(u, w) || g.adjacent(v, w)) continue;
                if (s.ledger.pair_finalized({u, w}) || s.ledger.pair_finalized({w, v})) continue;
                helper = w;
                break;
            }
            if (helper == -1)
                throw InternalError("helper exhaustion while routing a 2-bundle",
                                    instance_to_text(g));
            helpers_used.insert(helper);
            std::array<Vertex, 1> t{helper};
            resolve_multiplicities_at(g, s.ledger, u, t);
            finalize_vertex(g, s.ledger, u);
            finalize_vertex(g, s.ledger, v);
        } else {
            for (Vertex v : comp)
                if (g.degree(v) > 0) finalize_vertex(g, s.ledger, v);
        }
    }
}

namespace {

void solve_regular_level(Session& s, std::vector<Vertex>& active) {
    const int n = static_cast<int>(active.size());
    if (n < 18) {
        for (Vertex v : active)
            if (s.g.degree(v) != 0)
                throw InternalError("nonempty instance below 18 vertices in the regular pipeline",
                                    instance_to_text(s.g));
        return;
    }
    if (n < 24) {
        base_case_small(s, active);
        return;
    }
    regularize(s, active, regular_degree_bound(n));
    ReductionPlan plan = choose_plan(s.g, active);
    apply_reduction_round(s, active, plan.X, plan.B1, plan.A1);
    apply_reduction_round(s, active, plan.B1, plan.B2, plan.F2);
    solve_regular_level(s, active);
}

} // namespace

void solve_regular(Session& s) {
    const int n = s.g.vertex_count();
    if (s.g.max_degree() > regular_degree_bound(n))
        throw PreconditionError("max degree exceeds 2*floor(n/6) - 4");
    std::vector<Vertex> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    solve_regular_level(s, active);
    if (!s.ledger.fully_finalized())
        throw InternalError("regular pipeline left live edges", instance_to_text(s.g));
}

} // namespace pairsolve

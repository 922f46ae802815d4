#include "pairsolve/factorization.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace pairsolve {

bool SubFactor::try_add(const DemandGraph& g, EdgeId e) {
    const DemandEdge& de = g.edge(e);
    if (ids_.count(e)) throw PreconditionError("subfactor already holds edge " + std::to_string(e));
    if (degree(de.u) >= 2 || degree(de.v) >= 2) return false;
    ids_.insert(e);
    ++deg_[de.u];
    ++deg_[de.v];
    return true;
}

void SubFactor::add(const DemandGraph& g, EdgeId e) {
    if (!try_add(g, e))
        throw PreconditionError("edge " + std::to_string(e) + " would push a degree above 2");
}

bool SubFactor::is_two_factor_on(std::span<const Vertex> vertices) const {
    for (Vertex v : vertices)
        if (degree(v) != 2) return false;
    return true;
}

std::vector<EulerCircuit> eulerian_circuits(const DemandGraph& g) {
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("odd degree at vertex " + std::to_string(v));

    // Hierholzer with per-vertex cursors into the ascending incidence lists.
    std::vector<std::vector<EdgeId>> inc(n);
    for (Vertex v = 0; v < n; ++v) inc[v] = g.incident_edge_ids(v);
    std::vector<std::size_t> cursor(n, 0);
    std::set<EdgeId> used;

    auto next_unused = [&](Vertex v) -> EdgeId {
        while (cursor[v] < inc[v].size() && used.count(inc[v][cursor[v]])) ++cursor[v];
        return cursor[v] < inc[v].size() ? inc[v][cursor[v]] : -1;
    };

    std::vector<EulerCircuit> out;
    for (Vertex start = 0; start < n; ++start) {
        if (next_unused(start) == -1) continue;

        // stack-based traversal; edges emitted on unwind, then reversed
        std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
        std::vector<EdgeId> circuit;
        while (!stack.empty()) {
            Vertex at = stack.back().first;
            EdgeId e = next_unused(at);
            if (e == -1) {
                if (stack.back().second != -1) circuit.push_back(stack.back().second);
                stack.pop_back();
            } else {
                used.insert(e);
                const DemandEdge& de = g.edge(e);
                stack.emplace_back(de.u == at ? de.v : de.u, e);
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        out.push_back(EulerCircuit{start, std::move(circuit)});
    }
    return out;
}

namespace {

struct Arc {
    Vertex from;
    Vertex to;
    EdgeId edge;
};

// Perfect matching in the j-regular out/in bipartite incidence structure via
// augmenting paths (Kuhn). verts lists the component's vertices; arcs[i] is
// matched when taken[i].
std::vector<int> extract_matching(const std::vector<Vertex>& verts, const std::vector<Arc>& arcs,
                                  const std::vector<char>& removed) {
    std::map<Vertex, int> match_in; // in-copy vertex -> arc index
    std::map<Vertex, std::vector<int>> arcs_out;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (!removed[i]) arcs_out[arcs[i].from].push_back(i);

    std::set<Vertex> visited;
    std::function<bool(Vertex)> augment = [&](Vertex u) -> bool {
        for (int i : arcs_out[u]) {
            Vertex w = arcs[i].to;
            if (visited.count(w)) continue;
            visited.insert(w);
            auto it = match_in.find(w);
            if (it == match_in.end() || augment(arcs[it->second].from)) {
                match_in[w] = i;
                return true;
            }
        }
        return false;
    };

    for (Vertex u : verts) {
        visited.clear();
        if (!augment(u))
            throw InternalError("no perfect matching in regular bipartite incidence graph");
    }
    std::vector<int> chosen;
    for (const auto& [w, i] : match_in) chosen.push_back(i);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

std::vector<SubFactor> petersen_decompose(const DemandGraph& g) {
    const int n = g.vertex_count();
    int delta = g.max_degree();
    if (delta % 2 != 0) throw PreconditionError("maximum degree is odd");
    int k = delta / 2;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 0 && g.degree(v) != delta)
            throw PreconditionError("graph is not regular: vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(g.degree(v)));
    if (k == 0) return {};

    std::vector<SubFactor> factors(k);
    for (const EulerCircuit& circ : eulerian_circuits(g)) {
        // orient along the circuit
        std::vector<Arc> arcs;
        std::set<Vertex> vert_set;
        Vertex at = circ.start;
        for (EdgeId e : circ.edges) {
            const DemandEdge& de = g.edge(e);
            Vertex nxt = de.u == at ? de.v : de.u;
            arcs.push_back(Arc{at, nxt, e});
            vert_set.insert(at);
            at = nxt;
        }
        assert(at == circ.start);
        std::vector<Vertex> verts(vert_set.begin(), vert_set.end());

        std::vector<char> removed(arcs.size(), 0);
        for (int round = 0; round < k; ++round) {
            std::vector<int> chosen = extract_matching(verts, arcs, removed);
            for (int i : chosen) {
                factors[round].add(g, arcs[i].edge);
                removed[i] = 1;
            }
        }
    }

    for (int i = 0; i < k; ++i) {
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == delta && factors[i].degree(v) != 2)
                throw InternalError("factor " + std::to_string(i) + " misses vertex " +
                                    std::to_string(v));
    }
    return factors;
}

SubFactor extend_to_maximal_le2_factor(const DemandGraph& g, const SubFactor& seed,
                                       std::span<const EdgeId> candidates) {
    SubFactor out = seed;
    std::vector<EdgeId> cs(candidates.begin(), candidates.end());
    std::sort(cs.begin(), cs.end());
    for (EdgeId e : cs) {
        if (out.contains(e)) continue;
        out.try_add(g, e);
    }
    return out;
}

SubFactor extend_to_maximal_le2_factor(const DemandGraph& g, const SubFactor& seed) {
    std::vector<EdgeId> all = g.live_edge_ids();
    return extend_to_maximal_le2_factor(g, seed, all);
}

} // namespace pairsolve

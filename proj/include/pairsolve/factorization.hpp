#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "pairsolve/demand_graph.hpp"

namespace pairsolve {

// An edge subset of a host graph in which every vertex has degree <= 2
// (disjoint paths, cycles, C_2s and isolated vertices). A 2-factor has
// degree exactly 2 on its span.
class SubFactor {
public:
    SubFactor() = default;

    bool contains(EdgeId e) const { return ids_.count(e) > 0; }
    const std::set<EdgeId>& edges() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }

    int degree(Vertex v) const {
        auto it = deg_.find(v);
        return it == deg_.end() ? 0 : it->second;
    }

    // false (and no change) when either endpoint is already at degree 2
    bool try_add(const DemandGraph& g, EdgeId e);
    void add(const DemandGraph& g, EdgeId e);

    bool is_two_factor_on(std::span<const Vertex> vertices) const;

private:
    std::set<EdgeId> ids_;
    std::map<Vertex, int> deg_;
};

struct EulerCircuit {
    Vertex start = -1;
    std::vector<EdgeId> edges; // closed traversal; orientation recoverable from start
};

// One closed traversal per non-trivial connected component, covering every
// edge of the component exactly once. Requires all degrees even.
std::vector<EulerCircuit> eulerian_circuits(const DemandGraph& g);

// Decompose a 2k-regular multigraph into k edge-disjoint 2-factors.
// Vertices of degree 0 are ignored; all others must have degree exactly 2k.
// Per component the edges are oriented along an Eulerian circuit, the
// k-regular out/in bipartite incidence graph is split into k perfect
// matchings by repeated augmenting paths, and each matching maps back to a
// 2-factor.
std::vector<SubFactor> petersen_decompose(const DemandGraph& g);

// Grow `seed` by candidate edges (ascending id) while all degrees stay <= 2.
// The result is maximal within `candidates`.
SubFactor extend_to_maximal_le2_factor(const DemandGraph& g, const SubFactor& seed,
                                       std::span<const EdgeId> candidates);
SubFactor extend_to_maximal_le2_factor(const DemandGraph& g, const SubFactor& seed);

} // namespace pairsolve

#pragma once

#include <map>
#include <set>
#include <vector>

#include "pairsolve/errors.hpp"

namespace pairsolve {

using Vertex = int;
using EdgeId = int;
using OriginId = int;

// Unordered vertex pair, normalized lo < hi. Also used for finalized K_n edges.
struct VertexPair {
    Vertex lo = 0;
    Vertex hi = 0;

    VertexPair() = default;
    VertexPair(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

    bool operator==(const VertexPair&) const = default;
    auto operator<=>(const VertexPair&) const = default;
};

struct DemandEdge {
    EdgeId id = -1;
    Vertex u = -1; // endpoints as created; use pair() for the unordered view
    Vertex v = -1;
    OriginId origin = -1;

    VertexPair pair() const { return {u, v}; }
};

// Loopless multigraph on n labeled vertices. Edge ids are monotonically
// increasing and never reused, so lift provenance stays auditable.
class DemandGraph {
public:
    explicit DemandGraph(int n);

    int vertex_count() const { return n_; }
    int live_edge_count() const { return live_count_; }
    EdgeId next_edge_id() const { return static_cast<EdgeId>(edges_.size()); }

    EdgeId add_edge(Vertex u, Vertex v, OriginId origin);
    void remove_edge(EdgeId e);

    bool is_live(EdgeId e) const { return e >= 0 && e < next_edge_id() && live_[e]; }
    const DemandEdge& edge(EdgeId e) const;

    int degree(Vertex v) const;
    int gamma(Vertex v) const; // number of distinct neighbors
    int max_degree() const;

    bool adjacent(Vertex a, Vertex b) const;
    int pair_count(Vertex a, Vertex b) const;
    std::vector<EdgeId> pair_edge_ids(Vertex a, Vertex b) const; // ascending
    std::vector<Vertex> neighbors(Vertex v) const;               // ascending
    std::vector<EdgeId> incident_edge_ids(Vertex v) const;       // ascending
    std::vector<EdgeId> live_edge_ids() const;                   // ascending

    // Adjacency index agrees with the edge collection on every pair.
    bool check_consistency() const;

private:
    void check_vertex(Vertex v) const;

    int n_;
    int live_count_ = 0;
    std::vector<DemandEdge> edges_;
    std::vector<char> live_;
    std::vector<int> degree_;
    // per vertex: neighbor -> ids of live parallel edges
    std::vector<std::map<Vertex, std::set<EdgeId>>> adj_;
};

// m(v) = d(v) - gamma(v): the number of edges at v that must be rerouted
// before v's star becomes simple.
int multiplicity(const DemandGraph& g, Vertex v);

} // namespace pairsolve

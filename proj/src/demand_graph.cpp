#include "pairsolve/demand_graph.hpp"

#include <algorithm>
#include <string>

namespace pairsolve {

DemandGraph::DemandGraph(int n) : n_(n) {
    if (n < 0) throw PreconditionError("vertex count must be nonnegative");
    degree_.assign(n_, 0);
    adj_.resize(n_);
}

void DemandGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

EdgeId DemandGraph::add_edge(Vertex u, Vertex v, OriginId origin) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("loop edge at vertex " + std::to_string(u));
    EdgeId id = next_edge_id();
    edges_.push_back(DemandEdge{id, u, v, origin});
    live_.push_back(1);
    adj_[u][v].insert(id);
    adj_[v][u].insert(id);
    ++degree_[u];
    ++degree_[v];
    ++live_count_;
    return id;
}

void DemandGraph::remove_edge(EdgeId e) {
    if (!is_live(e)) throw PreconditionError("edge id " + std::to_string(e) + " is not live");
    const DemandEdge& de = edges_[e];
    live_[e] = 0;
    auto erase_side = [&](Vertex a, Vertex b) {
        auto it = adj_[a].find(b);
        it->second.erase(e);
        if (it->second.empty()) adj_[a].erase(it);
    };
    erase_side(de.u, de.v);
    erase_side(de.v, de.u);
    --degree_[de.u];
    --degree_[de.v];
    --live_count_;
}

const DemandEdge& DemandGraph::edge(EdgeId e) const {
    if (e < 0 || e >= next_edge_id())
        throw PreconditionError("unknown edge id " + std::to_string(e));
    return edges_[e];
}

int DemandGraph::degree(Vertex v) const {
    check_vertex(v);
    return degree_[v];
}

int DemandGraph::gamma(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int DemandGraph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree_[v]);
    return d;
}

bool DemandGraph::adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[a].count(b) > 0;
}

int DemandGraph::pair_count(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    auto it = adj_[a].find(b);
    return it == adj_[a].end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<EdgeId> DemandGraph::pair_edge_ids(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    auto it = adj_[a].find(b);
    if (it == adj_[a].end()) return {};
    return {it->second.begin(), it->second.end()};
}

std::vector<Vertex> DemandGraph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(adj_[v].size());
    for (const auto& [u, ids] : adj_[v]) out.push_back(u);
    return out;
}

std::vector<EdgeId> DemandGraph::incident_edge_ids(Vertex v) const {
    check_vertex(v);
    std::vector<EdgeId> out;
    for (const auto& [u, ids] : adj_[v]) out.insert(out.end(), ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> DemandGraph::live_edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(live_count_);
    for (EdgeId e = 0; e < next_edge_id(); ++e)
        if (live_[e]) out.push_back(e);
    return out;
}

bool DemandGraph::check_consistency() const {
    std::vector<int> deg(n_, 0);
    int live = 0;
    for (EdgeId e = 0; e < next_edge_id(); ++e) {
        if (!live_[e]) continue;
        ++live;
        const DemandEdge& de = edges_[e];
        if (de.u == de.v) return false;
        ++deg[de.u];
        ++deg[de.v];
        auto it = adj_[de.u].find(de.v);
        if (it == adj_[de.u].end() || !it->second.count(e)) return false;
        auto jt = adj_[de.v].find(de.u);
        if (jt == adj_[de.v].end() || !jt->second.count(e)) return false;
    }
    if (live != live_count_) return false;
    for (Vertex v = 0; v < n_; ++v) {
        if (deg[v] != degree_[v]) return false;
        std::size_t ids = 0;
        for (const auto& [u, s] : adj_[v]) {
            if (s.empty()) return false;
            ids += s.size();
        }
        if (static_cast<int>(ids) != degree_[v]) return false;
    }
    return true;
}

int multiplicity(const DemandGraph& g, Vertex v) {
    return g.degree(v) - g.gamma(v);
}

} // namespace pairsolve

#include "pairsolve/oracle.hpp"

#include <algorithm>

#include "pairsolve/verifier.hpp"

namespace pairsolve {

namespace {

class Search {
public:
    Search(const DemandGraph& g, const std::set<VertexPair>& reserved, const SearchBudget& budget,
           std::span<const Vertex> allowed)
        : g_(g), budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
        if (allowed.empty()) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) allowed_.push_back(v);
        } else {
            allowed_.assign(allowed.begin(), allowed.end());
            std::sort(allowed_.begin(), allowed_.end());
            allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
        }
        index_.assign(g.vertex_count(), -1);
        for (std::size_t i = 0; i < allowed_.size(); ++i) index_[allowed_[i]] = static_cast<int>(i);

        const int k = static_cast<int>(allowed_.size());
        used_.assign(k * k, 0);
        free_deg_.assign(k, k - 1);
        pending_deg_.assign(k, 0);
        for (VertexPair p : reserved) {
            if (p.lo < 0 || p.hi >= g.vertex_count()) continue;
            if (index_[p.lo] < 0 || index_[p.hi] < 0) continue;
            consume(index_[p.lo], index_[p.hi]);
        }

        demands_ = g.live_edge_ids();
        std::sort(demands_.begin(), demands_.end(), [&](EdgeId a, EdgeId b) {
            int ba = bundle_size(a), bb = bundle_size(b);
            if (ba != bb) return ba > bb;
            return a < b;
        });
        for (EdgeId e : demands_) {
            const DemandEdge& de = g.edge(e);
            if (index_[de.u] < 0 || index_[de.v] < 0)
                throw PreconditionError("demand endpoint outside the allowed vertex set");
            ++pending_deg_[index_[de.u]];
            ++pending_deg_[index_[de.v]];
        }
    }

    OracleOutcome run() {
        OracleOutcome out;
        int r = place(0);
        out.nodes = nodes_;
        if (r == 0) {
            out.status = OracleStatus::Feasible;
            out.paths = paths_;
        } else if (r == 1) {
            out.status = OracleStatus::Infeasible;
        } else {
            out.status = OracleStatus::BudgetExhausted;
        }
        return out;
    }

private:
    int bundle_size(EdgeId e) const {
        const DemandEdge& de = g_.edge(e);
        return g_.pair_count(de.u, de.v);
    }

    bool pair_used(int a, int b) const { return used_[a * allowed_.size() + b]; }
    void consume(int a, int b) {
        used_[a * allowed_.size() + b] = used_[b * allowed_.size() + a] = 1;
        --free_deg_[a];
        --free_deg_[b];
    }
    void release(int a, int b) {
        used_[a * allowed_.size() + b] = used_[b * allowed_.size() + a] = 0;
        ++free_deg_[a];
        ++free_deg_[b];
    }

    // 0 = solution found, 1 = subtree exhausted, 2 = budget hit
    int place(std::size_t i) {
        if (i == demands_.size()) return 0;
        for (std::size_t w = 0; w < allowed_.size(); ++w)
            if (pending_deg_[w] > free_deg_[w]) return 1;
        const DemandEdge& de = g_.edge(demands_[i]);
        int u = index_[de.u], v = index_[de.v];
        std::vector<int> path{u};
        std::vector<char> on_path(allowed_.size(), 0);
        on_path[u] = 1;
        for (int len = 1; len < static_cast<int>(allowed_.size()); ++len) {
            int r = extend(i, u, v, len, path, on_path);
            if (r != 1) return r;
        }
        return 1;
    }

    int extend(std::size_t i, int at, int goal, int remaining, std::vector<int>& path,
               std::vector<char>& on_path) {
        if (++nodes_ > budget_.node_limit) return 2;
        if ((nodes_ & 0x1fff) == 0 && std::chrono::steady_clock::now() > deadline_) return 2;
        for (int w = 0; w < static_cast<int>(allowed_.size()); ++w) {
            if (on_path[w] || pair_used(at, w)) continue;
            if (remaining == 1 ? w != goal : w == goal) continue;
            consume(at, w);
            // completing steps are re-checked in full by place(i+1); the
            // start vertex's own slot is served by the edge just consumed
            int eff_at = pending_deg_[at] - (at == path.front() ? 1 : 0);
            if (remaining > 1 && (eff_at > free_deg_[at] || pending_deg_[w] > free_deg_[w])) {
                release(at, w);
                continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            int r;
            if (remaining == 1) {
                pending_deg_[path.front()]--;
                pending_deg_[w]--;
                std::vector<Vertex>& stored = paths_[demands_[i]];
                stored.clear();
                for (int q : path) stored.push_back(allowed_[q]);
                r = place(i + 1);
                if (r == 1) paths_.erase(demands_[i]);
                pending_deg_[path.front()]++;
                pending_deg_[w]++;
            } else {
                r = extend(i, w, goal, remaining - 1, path, on_path);
            }
            path.pop_back();
            on_path[w] = 0;
            release(at, w);
            if (r != 1) return r;
        }
        return 1;
    }

    const DemandGraph& g_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<Vertex> allowed_;
    std::vector<int> index_;
    std::vector<char> used_;
    std::vector<int> free_deg_;
    std::vector<int> pending_deg_;
    std::vector<EdgeId> demands_;
    std::map<EdgeId, std::vector<Vertex>> paths_;
    std::uint64_t nodes_ = 0;
};

} // namespace

OracleOutcome brute_force_resolve(const DemandGraph& g, const std::set<VertexPair>& reserved,
                                  const SearchBudget& budget, std::span<const Vertex> allowed) {
    return Search(g, reserved, budget, allowed).run();
}

OracleResolution oracle_resolve(const DemandGraph& instance, const SearchBudget& budget) {
    OracleOutcome out = brute_force_resolve(instance, {}, budget);
    OracleResolution res;
    res.status = out.status;
    res.nodes = out.nodes;
    if (out.status != OracleStatus::Feasible) return res;
    for (const auto& [e, path] : out.paths) {
        const DemandEdge& de = instance.edge(e);
        OriginId o = de.origin >= 0 ? de.origin : e;
        std::vector<Vertex> p = path;
        if (p.front() != de.u && p.front() == de.v) std::reverse(p.begin(), p.end());
        res.resolution.paths.push_back(Resolution::PathEntry{o, std::move(p)});
    }
    std::sort(res.resolution.paths.begin(), res.resolution.paths.end(),
              [](const auto& a, const auto& b) { return a.origin < b.origin; });
    auto violations = verify(instance, res.resolution);
    if (!violations.empty()) {
        std::string msg = "oracle emitted an invalid resolution:";
        for (const auto& v : violations) msg += "\n  " + to_string(v);
        throw InternalError(msg);
    }
    return res;
}

} // namespace pairsolve

#include "pairsolve/lifting_coloring.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <optional>
#include <set>
#include <tuple>

namespace pairsolve {

namespace {

constexpr int kNoEdge = 3; // "no previous edge" marker in DP states

struct Component {
    bool cycle = false;
    std::vector<Vertex> verts; // traversal order
    // path: edges[j] joins verts[j], verts[j+1]; cycle: edges[j] joins
    // verts[j], verts[(j+1) % L], so the last edge closes the cycle
    std::vector<EdgeId> edges;

    int size() const { return static_cast<int>(verts.size()); }
};

std::vector<Component> split_components(const DemandGraph& g, const SubFactor& F,
                                        const std::vector<Vertex>& span) {
    std::map<Vertex, std::vector<std::pair<Vertex, EdgeId>>> adj;
    for (Vertex v : span) adj[v];
    for (EdgeId e : F.edges()) {
        const DemandEdge& de = g.edge(e);
        if (!adj.count(de.u) || !adj.count(de.v))
            throw PreconditionError("subfactor edge " + std::to_string(e) +
                                    " leaves the spanned vertex set");
        adj[de.u].emplace_back(de.v, e);
        adj[de.v].emplace_back(de.u, e);
    }
    for (auto& [v, nb] : adj) {
        if (nb.size() > 2)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree > 2 in subfactor");
        std::sort(nb.begin(), nb.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
    }

    std::set<Vertex> visited;
    std::set<EdgeId> used;
    std::vector<Component> comps;

    auto walk = [&](Vertex start, Component& c) {
        c.verts.push_back(start);
        visited.insert(start);
        Vertex at = start;
        while (true) {
            EdgeId next = -1;
            Vertex to = -1;
            for (const auto& [w, e] : adj[at])
                if (!used.count(e)) {
                    next = e;
                    to = w;
                    break;
                }
            if (next == -1) break;
            used.insert(next);
            c.edges.push_back(next);
            if (to == start) {
                c.cycle = true;
                break;
            }
            c.verts.push_back(to);
            visited.insert(to);
            at = to;
        }
    };

    // paths and isolated vertices first: scanning ascending hits a path's
    // smaller endpoint before its other one
    for (Vertex v : span) {
        if (visited.count(v) || adj[v].size() == 2) continue;
        Component c;
        walk(v, c);
        comps.push_back(std::move(c));
    }
    // what remains are cycles; start each at its smallest vertex
    for (Vertex v : span) {
        if (visited.count(v)) continue;
        Component c;
        walk(v, c);
        assert(c.cycle);
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.verts[0] < b.verts[0]; });
    return comps;
}

using CountPair = std::pair<int, int>; // (#color0, #color1); #color2 implied

// Enumerates the valid colorings of one component. Deg-2 vertices are forced
// by their incident edge colors, so the achievable vertex-count sets are
// exact and small.
class ComponentSearch {
public:
    ComponentSearch(const Component& comp, const std::map<Vertex, int>& pins) : comp_(comp) {
        pin_.resize(comp_.size(), -1);
        for (int i = 0; i < comp_.size(); ++i) {
            auto it = pins.find(comp_.verts[i]);
            if (it != pins.end()) pin_[i] = it->second;
        }
    }

    std::set<CountPair> achievable() const {
        std::set<CountPair> out;
        if (!comp_.cycle) {
            auto states = path_forward();
            for (const auto& [st, counts] : states) out.insert(counts.begin(), counts.end());
        } else {
            for_each_cycle_head([&](int c0, int ce0) {
                auto states = cycle_forward(c0, ce0);
                for (const auto& [st, counts] : states) {
                    if (close_colors(st, c0, ce0).empty()) continue;
                    out.insert(counts.begin(), counts.end());
                }
            });
        }
        return out;
    }

    // First assignment (in canonical choice order) hitting `target` counts.
    bool reconstruct(CountPair target, std::map<Vertex, int>& vcol,
                     std::map<EdgeId, int>& ecol) const {
        std::vector<int> vc(comp_.size(), -1), ec(comp_.edges.size(), -1);
        bool found = false;
        if (!comp_.cycle) {
            memo_.clear();
            for (int c0 : vertex_choices(0, -1)) {
                vc[0] = c0;
                if (path_dfs(1, kNoEdge, c0, unit(c0), target, vc, ec)) {
                    found = true;
                    break;
                }
            }
        } else {
            for_each_cycle_head([&](int c0, int ce0) {
                if (found) return;
                memo_.clear();
                vc[0] = c0;
                ec[0] = ce0;
                if (cycle_dfs(1, ce0, c0, ce0, unit(c0), target, vc, ec)) found = true;
            });
        }
        if (!found) return false;
        for (int i = 0; i < comp_.size(); ++i) vcol[comp_.verts[i]] = vc[i] + 1;
        for (std::size_t i = 0; i < comp_.edges.size(); ++i) ecol[comp_.edges[i]] = ec[i] + 1;
        return true;
    }

private:
    static CountPair unit(int color) { return {color == 0 ? 1 : 0, color == 1 ? 1 : 0}; }
    static CountPair plus(CountPair a, int color) {
        return {a.first + (color == 0), a.second + (color == 1)};
    }

    std::vector<int> vertex_choices(int idx, int forbidden_edge_color) const {
        std::vector<int> out;
        for (int c = 0; c < 3; ++c) {
            if (c == forbidden_edge_color) continue;
            if (pin_[idx] != -1 && pin_[idx] != c) continue;
            out.push_back(c);
        }
        return out;
    }

    template <typename Fn>
    void for_each_cycle_head(Fn&& fn) const {
        for (int c0 : vertex_choices(0, -1))
            for (int ce0 = 0; ce0 < 3; ++ce0)
                if (ce0 != c0) fn(c0, ce0);
    }

    std::vector<int> close_colors(std::pair<int, int> last_state, int c0, int ce0) const {
        auto [pe, pv] = last_state;
        std::vector<int> out;
        for (int c = 0; c < 3; ++c)
            if (c != pe && c != pv && c != c0 && c != ce0) out.push_back(c);
        return out;
    }

    using StateMap = std::map<std::pair<int, int>, std::set<CountPair>>;

    StateMap path_forward() const {
        StateMap cur;
        for (int c0 : vertex_choices(0, -1)) cur[{kNoEdge, c0}].insert(unit(c0));
        for (std::size_t j = 1; j < comp_.verts.size(); ++j) {
            StateMap nxt;
            for (const auto& [st, counts] : cur) {
                auto [pe, pv] = st;
                for (int ce = 0; ce < 3; ++ce) {
                    if (ce == pe || ce == pv) continue;
                    for (int cv : vertex_choices(static_cast<int>(j), ce)) {
                        auto& dst = nxt[{ce, cv}];
                        for (CountPair c : counts) dst.insert(plus(c, cv));
                    }
                }
            }
            cur = std::move(nxt);
        }
        return cur;
    }

    StateMap cycle_forward(int c0, int ce0) const {
        StateMap cur;
        for (int cv : vertex_choices(1, ce0)) cur[{ce0, cv}].insert(plus(unit(c0), cv));
        for (int j = 2; j < comp_.size(); ++j) {
            StateMap nxt;
            for (const auto& [st, counts] : cur) {
                auto [pe, pv] = st;
                for (int ce = 0; ce < 3; ++ce) {
                    if (ce == pe || ce == pv) continue;
                    for (int cv : vertex_choices(j, ce)) {
                        auto& dst = nxt[{ce, cv}];
                        for (CountPair c : counts) dst.insert(plus(c, cv));
                    }
                }
            }
            cur = std::move(nxt);
        }
        return cur;
    }

    bool path_dfs(int j, int pe, int pv, CountPair have, CountPair target, std::vector<int>& vc,
                  std::vector<int>& ec) const {
        if (j == comp_.size()) return have == target;
        if (overshoot(j, have, target)) return false;
        auto key = std::make_tuple(j, pe, pv, have);
        if (memo_.count(key)) return false;
        for (int ce = 0; ce < 3; ++ce) {
            if (ce == pe || ce == pv) continue;
            for (int cv : vertex_choices(j, ce)) {
                ec[j - 1] = ce;
                vc[j] = cv;
                if (path_dfs(j + 1, ce, cv, plus(have, cv), target, vc, ec)) return true;
            }
        }
        memo_.insert(key);
        return false;
    }

    bool cycle_dfs(int j, int pe, int c0, int ce0, CountPair have, CountPair target,
                   std::vector<int>& vc, std::vector<int>& ec) const {
        // place v_j given the color pe of the edge leading into it
        if (overshoot(j, have, target)) return false;
        auto key = std::make_tuple(j, pe, vc[j - 1], have);
        if (memo_.count(key)) return false;
        for (int cv : vertex_choices(j, pe)) {
            vc[j] = cv;
            CountPair now = plus(have, cv);
            if (j + 1 == comp_.size()) {
                if (now != target) continue;
                auto close = close_colors({pe, cv}, c0, ce0);
                if (close.empty()) continue;
                ec[j] = close.front();
                return true;
            }
            for (int ce = 0; ce < 3; ++ce) {
                if (ce == pe || ce == cv) continue;
                ec[j] = ce;
                if (cycle_dfs(j + 1, ce, c0, ce0, now, target, vc, ec)) return true;
            }
        }
        memo_.insert(key);
        return false;
    }

    bool overshoot(int placed, CountPair have, CountPair target) const {
        int remaining = comp_.size() - placed;
        if (have.first > target.first || have.second > target.second) return true;
        int have2 = placed - have.first - have.second;
        int target2 = comp_.size() - target.first - target.second;
        if (have2 > target2) return true;
        return (target.first - have.first) + (target.second - have.second) +
                   (target2 - have2) != remaining;
    }

    const Component& comp_;
    std::vector<int> pin_; // -1 or forced color per traversal index
    mutable std::set<std::tuple<int, int, int, CountPair>> memo_;
};

} // namespace

LiftingColoring balanced_lifting_coloring(const DemandGraph& g, const SubFactor& F,
                                          std::span<const Vertex> span_vertices,
                                          const std::array<Vertex, 3>& pins) {
    std::vector<Vertex> span(span_vertices.begin(), span_vertices.end());
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());

    std::map<Vertex, int> pin_colors;
    for (int i = 0; i < 3; ++i) {
        if (!std::binary_search(span.begin(), span.end(), pins[i]))
            throw PreconditionError("pin " + std::to_string(pins[i]) + " outside spanned set");
        if (!pin_colors.emplace(pins[i], i).second)
            throw PreconditionError("pins are not pairwise distinct");
    }
    for (EdgeId e : F.edges()) {
        const DemandEdge& de = g.edge(e);
        if (pin_colors.count(de.u) && pin_colors.count(de.v))
            throw PreconditionError("pins " + std::to_string(de.u) + " and " +
                                    std::to_string(de.v) + " are adjacent in the subfactor");
    }

    std::vector<Component> comps = split_components(g, F, span);
    std::vector<ComponentSearch> searches;
    searches.reserve(comps.size());
    std::vector<std::vector<CountPair>> options;
    for (const Component& c : comps) {
        searches.emplace_back(c, pin_colors);
        std::set<CountPair> a = searches.back().achievable();
        if (a.empty())
            throw InternalError("component starting at vertex " + std::to_string(c.verts[0]) +
                                " admits no lifting coloring");
        options.emplace_back(a.begin(), a.end());
    }

    const int total = static_cast<int>(span.size());
    auto within = [](int n0, int n1, int n2, int w) {
        return std::abs(n0 - n1) <= w && std::abs(n0 - n2) <= w && std::abs(n1 - n2) <= w;
    };

    // reach[j] = cumulative count pairs after the first j components
    auto run = [&](int band) -> std::optional<LiftingColoring> {
        std::vector<std::set<CountPair>> reach(comps.size() + 1);
        reach[0].insert({0, 0});
        int placed = 0;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            placed += comps[j].size();
            for (CountPair base : reach[j])
                for (CountPair u : options[j]) {
                    int n0 = base.first + u.first;
                    int n1 = base.second + u.second;
                    int n2 = placed - n0 - n1;
                    if (within(n0, n1, n2, band)) reach[j + 1].insert({n0, n1});
                }
            if (reach[j + 1].empty()) return std::nullopt;
        }

        // most balanced reachable split, ties by lexicographic order
        std::optional<CountPair> final_counts;
        int best_spread = 3;
        for (CountPair c : reach.back()) {
            int n2 = total - c.first - c.second;
            if (!within(c.first, c.second, n2, 2)) continue;
            int spread = std::max({c.first, c.second, n2}) - std::min({c.first, c.second, n2});
            if (spread < best_spread) {
                best_spread = spread;
                final_counts = c;
            }
        }
        if (!final_counts) return std::nullopt;

        LiftingColoring col;
        CountPair at = *final_counts;
        std::vector<CountPair> chosen(comps.size());
        for (int j = static_cast<int>(comps.size()) - 1; j >= 0; --j) {
            bool ok = false;
            for (CountPair u : options[j]) {
                CountPair prev{at.first - u.first, at.second - u.second};
                if (prev.first < 0 || prev.second < 0) continue;
                if (!reach[j].count(prev)) continue;
                chosen[j] = u;
                at = prev;
                ok = true;
                break;
            }
            if (!ok) return std::nullopt;
        }
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (!searches[j].reconstruct(chosen[j], col.vertex_color, col.edge_color))
                throw InternalError("component reconstruction disagreed with its achievable set");
        return col;
    };

    if (auto col = run(4)) return *col;
    if (auto col = run(std::max(total, 2))) return *col;
    throw InternalError("no balanced lifting coloring found (statement guarantees existence)");
}

std::vector<std::string> validate_coloring(const DemandGraph& g, const SubFactor& F,
                                           std::span<const Vertex> span_vertices,
                                           const std::array<Vertex, 3>& pins,
                                           const LiftingColoring& c) {
    std::vector<std::string> problems;
    std::vector<Vertex> span(span_vertices.begin(), span_vertices.end());
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());

    auto vcolor = [&](Vertex v) -> int {
        auto it = c.vertex_color.find(v);
        return it == c.vertex_color.end() ? -1 : it->second;
    };

    std::array<int, 4> class_size{0, 0, 0, 0};
    for (Vertex v : span) {
        int cv = vcolor(v);
        if (cv < 1 || cv > 3) {
            problems.push_back("vertex " + std::to_string(v) + " uncolored");
            continue;
        }
        ++class_size[cv];
    }

    std::map<Vertex, std::set<int>> incident;
    for (EdgeId e : F.edges()) {
        auto it = c.edge_color.find(e);
        if (it == c.edge_color.end() || it->second < 1 || it->second > 3) {
            problems.push_back("edge " + std::to_string(e) + " uncolored");
            continue;
        }
        int ce = it->second;
        const DemandEdge& de = g.edge(e);
        for (Vertex v : {de.u, de.v}) {
            if (ce == vcolor(v))
                problems.push_back("edge " + std::to_string(e) + " shares color " +
                                   std::to_string(ce) + " with endpoint " + std::to_string(v));
            if (!incident[v].insert(ce).second)
                problems.push_back("two edges of color " + std::to_string(ce) +
                                   " meet at vertex " + std::to_string(v));
        }
    }

    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            if (std::abs(class_size[a] - class_size[b]) > 2) {
                problems.push_back("vertex classes unbalanced: |" + std::to_string(class_size[a]) +
                                   " - " + std::to_string(class_size[b]) + "| > 2");
                a = b = 4;
            }

    for (int i = 0; i < 3; ++i)
        if (vcolor(pins[i]) != i + 1)
            problems.push_back("pin " + std::to_string(pins[i]) + " has color " +
                               std::to_string(vcolor(pins[i])) + ", expected " +
                               std::to_string(i + 1));
    return problems;
}

} // namespace pairsolve

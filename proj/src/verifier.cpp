#include "pairsolve/verifier.hpp"

#include <map>
#include <set>

namespace pairsolve {

std::string to_string(const Violation& v) {
    std::string s;
    switch (v.kind) {
    case ViolationKind::EndpointMismatch: s = "endpoint-mismatch"; break;
    case ViolationKind::RepeatedKnEdge: s = "repeated-K_n-edge"; break;
    case ViolationKind::NonSimplePath: s = "non-simple-path"; break;
    case ViolationKind::MissingPair: s = "missing-pair"; break;
    case ViolationKind::ExtraPair: s = "extra-pair"; break;
    case ViolationKind::VertexOutOfRange: s = "vertex-out-of-range"; break;
    }
    if (!v.origins.empty()) {
        s += " origins";
        for (OriginId o : v.origins) s += " " + std::to_string(o);
    }
    if (v.edge) s += " edge {" + std::to_string(v.edge->lo) + "," + std::to_string(v.edge->hi) + "}";
    if (!v.note.empty()) s += " (" + v.note + ")";
    return s;
}

std::vector<Violation> verify(const DemandGraph& instance, const Resolution& res) {
    std::vector<Violation> out;
    const int n = instance.vertex_count();

    std::map<OriginId, VertexPair> demanded;
    for (EdgeId e : instance.live_edge_ids()) {
        const DemandEdge& de = instance.edge(e);
        OriginId o = de.origin >= 0 ? de.origin : e;
        demanded.emplace(o, de.pair());
    }

    std::map<VertexPair, std::vector<OriginId>> uses;
    std::set<OriginId> covered;

    for (const auto& pe : res.paths) {
        if (!demanded.count(pe.origin)) {
            out.push_back({ViolationKind::ExtraPair, {pe.origin}, std::nullopt,
                           "no such demand pair"});
            continue;
        }
        if (covered.count(pe.origin)) {
            out.push_back({ViolationKind::ExtraPair, {pe.origin}, std::nullopt,
                           "origin resolved twice"});
            continue;
        }
        covered.insert(pe.origin);

        bool in_range = true;
        for (Vertex v : pe.path)
            if (v < 0 || v >= n) {
                out.push_back({ViolationKind::VertexOutOfRange, {pe.origin}, std::nullopt,
                               "vertex " + std::to_string(v)});
                in_range = false;
            }
        if (!in_range) continue;

        std::set<Vertex> seen(pe.path.begin(), pe.path.end());
        if (seen.size() != pe.path.size() || pe.path.size() < 2) {
            out.push_back({ViolationKind::NonSimplePath, {pe.origin}, std::nullopt,
                           pe.path.size() < 2 ? "fewer than two vertices" : "repeated vertex"});
            continue;
        }

        VertexPair want = demanded.at(pe.origin);
        VertexPair got{pe.path.front(), pe.path.back()};
        if (want != got)
            out.push_back({ViolationKind::EndpointMismatch, {pe.origin}, got, ""});

        for (std::size_t i = 0; i + 1 < pe.path.size(); ++i)
            uses[VertexPair{pe.path[i], pe.path[i + 1]}].push_back(pe.origin);
    }

    for (const auto& [o, pair] : demanded)
        if (!covered.count(o)) out.push_back({ViolationKind::MissingPair, {o}, pair, ""});

    for (const auto& [pair, origins] : uses)
        if (origins.size() > 1)
            out.push_back({ViolationKind::RepeatedKnEdge, origins, pair, ""});

    return out;
}

} // namespace pairsolve

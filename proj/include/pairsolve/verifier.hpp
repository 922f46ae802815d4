#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairsolve/demand_graph.hpp"
#include "pairsolve/route_ledger.hpp"

namespace pairsolve {

enum class ViolationKind {
    EndpointMismatch,
    RepeatedKnEdge,
    NonSimplePath,
    MissingPair,
    ExtraPair,
    VertexOutOfRange,
};

struct Violation {
    ViolationKind kind;
    std::vector<OriginId> origins;
    std::optional<VertexPair> edge;
    std::string note;
};

std::string to_string(const Violation& v);

// Trust-nothing check of a resolution against the pre-solve instance:
//  (a) per origin, path endpoints equal the demanded pair, every demand is
//      covered and nothing extra appears,
//  (b) every path is simple with vertices in range,
//  (c) no K_n edge occurs twice, within or across paths.
// Violations are collected exhaustively; the K_n edge set is rebuilt here,
// independent of any solver bookkeeping.
std::vector<Violation> verify(const DemandGraph& instance, const Resolution& res);

inline bool verify_ok(const DemandGraph& instance, const Resolution& res) {
    return verify(instance, res).empty();
}

} // namespace pairsolve

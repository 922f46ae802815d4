#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pairsolve/demand_graph.hpp"

namespace pairsolve {

enum class StepKind { Live, Final };

// One element of a route walk: either a live demand edge (by id) or a
// finalized K_n edge. Orientation (from -> to) follows the walk direction.
struct WalkStep {
    StepKind kind = StepKind::Live;
    Vertex from = -1;
    Vertex to = -1;
    EdgeId edge = -1; // valid while kind == Live
};

enum class OriginKind { Real, Dummy };

struct LedgerEntry {
    Vertex source = -1;
    Vertex target = -1;
    OriginKind kind = OriginKind::Real;
    std::vector<WalkStep> walk;
};

// Final output: one simple path in K_n per real demand pair.
struct Resolution {
    struct PathEntry {
        OriginId origin = -1;
        std::vector<Vertex> path; // source ... target
    };
    std::vector<PathEntry> paths; // ascending origin
};

// Per original demand pair, the ordered walk of live edge ids / finalized
// K_n edges tracing all liftings. A lift replaces one slot by two in place,
// so walks stay connected from source to target at all times.
class RouteLedger {
public:
    OriginId add_origin(Vertex source, Vertex target, OriginKind kind, EdgeId initial_edge);

    int origin_count() const { return static_cast<int>(entries_.size()); }
    const LedgerEntry& entry(OriginId o) const { return entries_.at(o); }

    // Splice: the slot holding old_edge becomes two slots routed via `via`,
    // in walk order. first/second are the new (u,via) and (via,v) edge ids.
    void replace_with_lift(EdgeId old_edge, EdgeId first, EdgeId second, Vertex via);

    // Turn the slot holding e into the finalized K_n edge of its endpoints.
    void finalize_edge(EdgeId e);

    // Replace the slot holding e by a run of finalized K_n edges tracing
    // `path`, which must connect e's endpoints (either direction).
    void finalize_slot_with_path(EdgeId e, const std::vector<Vertex>& path);

    bool fully_finalized() const;

    // Finalized K_n pairs with use counts (global distinctness means all 1).
    const std::map<VertexPair, int>& finalized_pair_counts() const { return finalized_counts_; }
    bool pair_finalized(VertexPair p) const { return finalized_counts_.count(p) > 0; }

    // Full-scan audits; empty result means clean.
    //  - every live edge of g sits in exactly one walk slot, exactly once
    //  - every walk chains from source to target
    std::vector<std::string> audit_walks(const DemandGraph& g) const;
    // every finalized K_n pair used exactly once across all walks
    std::vector<std::string> audit_finalized_distinct() const;

private:
    struct SlotRef {
        OriginId origin = -1;
        int index = -1;
    };

    std::vector<LedgerEntry> entries_;
    std::unordered_map<EdgeId, SlotRef> slot_of_;
    std::map<VertexPair, int> finalized_counts_;
};

// Shortcut a source..target vertex walk to a simple path: repeatedly find the
// leftmost repeated vertex and excise the closed sub-walk between its first
// two occurrences.
std::vector<Vertex> shortcut_walk(std::vector<Vertex> walk);

// Convert a fully finalized ledger into a Resolution. Dummy origins are
// dropped, each real walk is shortcut to a simple path.
Resolution extract_resolution(const RouteLedger& ledger);

} // namespace pairsolve

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "pairsolve/demand_graph.hpp"
#include "pairsolve/route_ledger.hpp"

namespace pairsolve {

struct SearchBudget {
    std::uint64_t node_limit = 500'000'000;
    std::chrono::milliseconds time_limit{60'000};
};

enum class OracleStatus {
    Feasible,
    Infeasible,      // only after complete exhaustion, never on a budget stop
    BudgetExhausted, // explicitly not an infeasibility claim
};

struct OracleOutcome {
    OracleStatus status = OracleStatus::BudgetExhausted;
    std::map<EdgeId, std::vector<Vertex>> paths; // per live demand edge, on Feasible
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking resolver over K_n restricted to `allowed` vertices
// (all vertices when empty). Demand edges are processed by bundle size
// descending then id; per demand, simple paths between its endpoints are
// enumerated shortest first over K_n edges that are neither `reserved` nor
// already used. A vertex whose pending demand degree exceeds its unconsumed
// K_n degree prunes the branch.
OracleOutcome brute_force_resolve(const DemandGraph& g, const std::set<VertexPair>& reserved,
                                  const SearchBudget& budget,
                                  std::span<const Vertex> allowed = {});

// Top-level convenience: resolve a whole instance; on Feasible the returned
// Resolution has been checked against the verifier.
struct OracleResolution {
    OracleStatus status = OracleStatus::BudgetExhausted;
    Resolution resolution;
    std::uint64_t nodes = 0;
};
OracleResolution oracle_resolve(const DemandGraph& instance, const SearchBudget& budget);

} // namespace pairsolve

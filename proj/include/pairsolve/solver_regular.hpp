#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pairsolve/core_ops.hpp"
#include "pairsolve/factorization.hpp"

namespace pairsolve {

// Degree bound under which the reduction pipeline applies.
inline int regular_degree_bound(int n) { return 2 * (n / 6) - 4; }

// One round of the reduction: X (independent) and the two avoid-set /
// factor choices for the two 2-factor liftings.
struct ReductionPlan {
    std::array<Vertex, 3> X{};
    std::array<Vertex, 3> B1{};
    std::vector<Vertex> B2; // at most 3
    SubFactor A1;
    SubFactor A2;
    SubFactor F2;
};

// Pad with dummy parallel edges (two smallest deficient vertices joined
// while at least two are deficient) and, for a single leftover deficient
// vertex, lift edges of the rest of the graph onto it until every active
// vertex has degree exactly r. Requires even r and max degree <= r.
void regularize(Session& s, const std::vector<Vertex>& active, int r);

// Remove the three vertices of X from the pending graph: lift every F-edge f
// to the X-vertex of f's edge color (pins make the X-internal lifted edges
// simple), then resolve each X-vertex's multiplicities by lifting its
// remaining edges into fresh vertices of its target color class, avoiding
// `avoid_set`, and finalize the three simple stars. X is removed from
// `active` in place.
void apply_reduction_round(Session& s, std::vector<Vertex>& active,
                           const std::array<Vertex, 3>& X, std::span<const Vertex> avoid_set,
                           const SubFactor& F);

// X from the smallest independent triple; A1/A2 the first two Petersen
// factors; F2 a maximal <=2-factor of (g - A1) restricted to the surviving
// vertices, seeded with A2 - X; B1 covers all F2-degree-0 vertices plus one
// endpoint per F2 path component, padded to an independent triple of g - A1.
ReductionPlan choose_plan(const DemandGraph& g, const std::vector<Vertex>& active);

// ReductionPlan invariants; empty result means ok.
std::vector<std::string> validate_plan(const DemandGraph& g, const std::vector<Vertex>& active,
                                       const ReductionPlan& plan);

// Resolve a pending graph of maximum degree <= 2 (disjoint 2-bundles,
// cycles, paths, isolated vertices): simple components finalize directly;
// each 2-bundle keeps one direct edge and routes the other through a helper
// vertex, each helper used at most once.
void base_case_small(Session& s, const std::vector<Vertex>& active);

// Full pipeline for instances with max degree <= 2*floor(n/6)-4:
// regularize, two reduction rounds per level, recurse on n-6 vertices.
void solve_regular(Session& s);

} // namespace pairsolve

#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pairsolve/demand_graph.hpp"
#include "pairsolve/factorization.hpp"

namespace pairsolve {

// 3-coloring of a <=2-factor's edges and of all spanned vertices where every
// edge differs from both endpoints, edges sharing a vertex differ, and the
// three vertex color classes have pairwise size difference <= 2.
struct LiftingColoring {
    std::map<EdgeId, int> edge_color;  // values in {1,2,3}
    std::map<Vertex, int> vertex_color; // values in {1,2,3}, keys = spanned vertices
};

// Construct a balanced lifting coloring of F over `span_vertices` with
// pins[i] colored i+1. pins must be pairwise distinct and non-adjacent in F.
//
// Components of F (paths, cycles, C_2s, isolated vertices) are enumerated by
// a transfer walk recording their achievable vertex-color count vectors; a
// dynamic program combines components, kept inside a band around balance and
// widened to the full range if the banded pass fails. Deg-2 vertices are
// forced by their incident edge colors, so the per-component sets are exact.
// Exhaustion of the full-range pass throws InternalError: the statement this
// implements asserts existence.
LiftingColoring balanced_lifting_coloring(const DemandGraph& g, const SubFactor& F,
                                          std::span<const Vertex> span_vertices,
                                          const std::array<Vertex, 3>& pins);

// Check every LiftingColoring invariant plus the pin assignment; empty
// result means ok.
std::vector<std::string> validate_coloring(const DemandGraph& g, const SubFactor& F,
                                           std::span<const Vertex> span_vertices,
                                           const std::array<Vertex, 3>& pins,
                                           const LiftingColoring& c);

} // namespace pairsolve

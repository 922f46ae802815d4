#pragma once

#include <functional>
#include <vector>

#include "pairsolve/core_ops.hpp"

namespace pairsolve {

enum class SparseCase {
    B0Trivial,       // bundles and isolated vertices only; routed directly
    B0Pick,          // no high-degree vertex; delete the max-gamma vertex
    B1,              // one high-degree vertex; delete it
    B2Outside,       // a high-degree vertex has a neighbor outside the pair
    B2Bundle,        // the two high-degree vertices form a bare bundle
    B3Internal,      // all bundle edges inside the high-degree triangle
    B3InternalOracle, // ... and no outside edge exists (n <= 7)
    B3Outside,       // an edge leaves the high-degree triangle
};

struct CaseTag {
    SparseCase kind = SparseCase::B0Trivial;
    Vertex x = -1;              // deleted vertex (when one is deleted)
    std::vector<Vertex> zs;     // the high-degree set B at case time
    EdgeId f = -1;              // the outside edge of the B3 cases
    EdgeId e = -1;              // the in-B edge of the B3 cases
    std::vector<Vertex> helpers;
};

// Called after every inductive step with the post-step graph and active set.
using StepObserver =
    std::function<void(const DemandGraph&, const std::vector<Vertex>&, const CaseTag&)>;

// Add dummy demands on the smallest non-adjacent pair of degree < n-1
// vertices until the edge count reaches 2n-5 or no such pair remains.
int pad_to_exact(Session& s, const std::vector<Vertex>& active);

// Vertices of degree >= n-2, ascending. Under |E| <= 2n-5 at most 3.
std::vector<Vertex> compute_B(const DemandGraph& g, const std::vector<Vertex>& active);

// One induction step: pick a vertex by the |B| casework, resolve its
// multiplicities, finalize and delete it (two vertices for the bundle case).
// Afterwards |E| <= 2n'-5 and max degree <= n'-1 hold on the survivors.
CaseTag inductive_step(Session& s, std::vector<Vertex>& active);

// Full pipeline for instances with |E| <= 2n-5 and max degree <= n-1:
// pad, step, recurse; instances on <= 6 vertices go to the exhaustive
// resolver, honoring already-finalized K_n edges.
void solve_sparse(Session& s, const StepObserver& observer = {});

} // namespace pairsolve

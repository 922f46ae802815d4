#pragma once

#include <cstdint>

#include "pairsolve/demand_graph.hpp"

namespace pairsolve {

// Instance generators. All are deterministic under a fixed seed; family
// invariants (regularity, edge counts, degree caps) are asserted before
// returning. Edge insertion order defines origin ids 0..m-1.

// r-regular loopless multigraph: union of r random perfect matchings for
// even n, union of r/2 random spanning cycles for odd n (r must then be
// even). Requires n*r even.
DemandGraph gen_regular(int n, int r, std::uint64_t seed);

// Exactly 2n-5 edges with max degree <= n-1, by sequential random pair
// insertion rejecting endpoints already at degree n-2. Requires n >= 4.
DemandGraph gen_sparse(int n, std::uint64_t seed);

// Pairs (2i, 2i+1) each carrying q parallel edges; every degree equals q.
// Requires even n, q >= 1.
DemandGraph gen_one_factor_bundles(int n, int q);

// Pairs (0,1) and (2,3) each carrying n-2 parallel edges: 2n-4 edges total,
// one above the 2n-5 budget, and not resolvable. Requires n >= 4.
DemandGraph gen_double_bundle(int n);

} // namespace pairsolve

#include <doctest.h>

#include "pairsolve/generators.hpp"
#include "pairsolve/solver_regular.hpp"
#include "test_support.hpp"

using namespace pairsolve;

TEST_CASE("gen_regular produces regular multigraphs") {
    DemandGraph empty = gen_regular(6, 0, 1);
    CHECK(empty.live_edge_count() == 0);

    DemandGraph g = gen_regular(4, 2, 42);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.live_edge_count() == 4);

    DemandGraph big = gen_regular(24, 4, 7);
    for (int v = 0; v < 24; ++v) CHECK(big.degree(v) == 4);
    CHECK(big.max_degree() == regular_degree_bound(24));

    DemandGraph odd = gen_regular(19, 2, 3);
    for (int v = 0; v < 19; ++v) CHECK(odd.degree(v) == 2);
}

TEST_CASE("gen_regular rejects odd degree sums") {
    CHECK_THROWS_AS(gen_regular(5, 3, 1), PreconditionError);
}

TEST_CASE("gen_regular is deterministic per seed") {
    CHECK(live_pairs(gen_regular(10, 4, 5)) == live_pairs(gen_regular(10, 4, 5)));
    CHECK(live_pairs(gen_regular(10, 4, 5)) != live_pairs(gen_regular(10, 4, 6)));
}

TEST_CASE("gen_sparse hits the edge budget and degree cap") {
    for (int n : {4, 5, 9, 30}) {
        DemandGraph g = gen_sparse(n, 11);
        CHECK(g.live_edge_count() == 2 * n - 5);
        CHECK(g.max_degree() <= n - 1);
    }
    CHECK(gen_sparse(4, 1).live_edge_count() == 3);
    CHECK(live_pairs(gen_sparse(12, 8)) == live_pairs(gen_sparse(12, 8)));
}

TEST_CASE("gen_one_factor_bundles builds the parallel one-factor") {
    DemandGraph matching = gen_one_factor_bundles(6, 1);
    CHECK(live_pairs(matching) ==
          std::multiset<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});

    DemandGraph g = gen_one_factor_bundles(18, 2);
    CHECK(g.live_edge_count() == 18);
    for (int v = 0; v < 18; ++v) CHECK(g.degree(v) == 2);

    DemandGraph heavy = gen_one_factor_bundles(4, 3);
    CHECK(heavy.pair_count(0, 1) == 3);
    CHECK(heavy.pair_count(2, 3) == 3);

    CHECK_THROWS_AS(gen_one_factor_bundles(5, 1), PreconditionError);
}

TEST_CASE("gen_double_bundle always overshoots the sparse budget by one") {
    for (int n : {4, 5, 9}) {
        DemandGraph g = gen_double_bundle(n);
        CHECK(g.live_edge_count() == 2 * n - 4);
        CHECK(g.pair_count(0, 1) == n - 2);
        CHECK(g.pair_count(2, 3) == n - 2);
    }
    CHECK_THROWS_AS(gen_double_bundle(3), PreconditionError);
}

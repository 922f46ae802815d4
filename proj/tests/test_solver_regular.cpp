#include <doctest.h>

#include <set>

#include "pairsolve/generators.hpp"
#include "pairsolve/solver_regular.hpp"
#include "pairsolve/verifier.hpp"
#include "test_support.hpp"

using namespace pairsolve;

namespace {

std::vector<Vertex> all_active(int n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

Session seeded_regular_session(int n, int r, std::uint64_t seed) {
    return make_session(gen_regular(n, r, seed));
}

void check_solved(const DemandGraph& instance) {
    Session s = make_session(instance);
    solve_regular(s);
    Resolution res = extract_resolution(s.ledger);
    auto violations = verify(instance, res);
    for (const auto& v : violations) MESSAGE(to_string(v));
    CHECK(violations.empty());
    CHECK(s.ledger.audit_finalized_distinct().empty());
}

} // namespace

TEST_CASE("regularize pads an empty graph with dummy bundles") {
    Session s(4);
    regularize(s, all_active(4), 2);
    CHECK(live_pairs(s.g) == std::multiset<std::pair<int, int>>{{0, 1}, {0, 1}, {2, 3}, {2, 3}});
    for (OriginId o = 0; o < s.ledger.origin_count(); ++o)
        CHECK(s.ledger.entry(o).kind == OriginKind::Dummy);
}

TEST_CASE("regularize leaves a regular graph unchanged") {
    Session s = session_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto before = live_pairs(s.g);
    regularize(s, all_active(4), 2);
    CHECK(live_pairs(s.g) == before);
    CHECK(s.ledger.origin_count() == 4);
}

TEST_CASE("regularize lifts onto a single deficient vertex") {
    Session s = session_from_pairs(4, {{0, 1}, {1, 2}, {2, 0}});
    regularize(s, all_active(4), 2);
    CHECK(live_pairs(s.g) ==
          std::multiset<std::pair<int, int>>{{0, 3}, {1, 3}, {1, 2}, {0, 2}});
    for (int v = 0; v < 4; ++v) CHECK(s.g.degree(v) == 2);
    CHECK(s.ledger.audit_walks(s.g).empty());
}

TEST_CASE("choose_plan satisfies all plan invariants on seeded instances") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Session s = seeded_regular_session(24, 4, seed);
        auto active = all_active(24);
        ReductionPlan plan = choose_plan(s.g, active);
        auto problems = validate_plan(s.g, active, plan);
        for (const auto& p : problems) MESSAGE(p);
        CHECK(problems.empty());
        CHECK(plan.B2.size() <= 3);
        std::vector<Vertex> y;
        for (Vertex v : active)
            if (v != plan.X[0] && v != plan.X[1] && v != plan.X[2]) y.push_back(v);
        if (plan.F2.is_two_factor_on(y)) CHECK(plan.B2.empty());
    }
}

TEST_CASE("apply_reduction_round meets the surviving degree bound") {
    Session s = seeded_regular_session(24, 4, 5);
    auto active = all_active(24);
    ReductionPlan plan = choose_plan(s.g, active);
    std::vector<int> deg_before(24), f_deg(24, 0);
    for (Vertex v = 0; v < 24; ++v) deg_before[v] = s.g.degree(v);
    for (Vertex v = 0; v < 24; ++v) f_deg[v] = plan.A1.degree(v);
    std::set<Vertex> b1(plan.B1.begin(), plan.B1.end());

    apply_reduction_round(s, active, plan.X, plan.B1, plan.A1);

    CHECK(active.size() == 21);
    for (Vertex v : active) {
        int bound = deg_before[v] - f_deg[v] + (b1.count(v) ? 0 : 1);
        CHECK(s.g.degree(v) <= bound);
    }
    CHECK(s.ledger.audit_walks(s.g).empty());
    CHECK(s.ledger.audit_finalized_distinct().empty());
}

TEST_CASE("X-internal finalized edges stay simple across 500 randomized runs") {
    // the multi-edge check inside apply_reduction_round throws on violation
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Session s = seeded_regular_session(24, 4, 1000 + seed);
        auto active = all_active(24);
        ReductionPlan plan = choose_plan(s.g, active);
        CHECK_NOTHROW(apply_reduction_round(s, active, plan.X, plan.B1, plan.A1));
        CHECK(s.ledger.audit_finalized_distinct().empty());
    }
}

TEST_CASE("the degree-bound chain drops by one per reduction round") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Session s = seeded_regular_session(24, 4, 77 + seed);
        auto active = all_active(24);
        int r = regular_degree_bound(24);
        regularize(s, active, r);
        ReductionPlan plan = choose_plan(s.g, active);
        apply_reduction_round(s, active, plan.X, plan.B1, plan.A1);
        int d1 = 0;
        for (Vertex v : active) d1 = std::max(d1, s.g.degree(v));
        CHECK(d1 <= r - 1);
        apply_reduction_round(s, active, plan.B1, plan.B2, plan.F2);
        int d2 = 0;
        for (Vertex v : active) d2 = std::max(d2, s.g.degree(v));
        CHECK(d2 <= r - 2);
        CHECK(d2 <= regular_degree_bound(18));
        CHECK(active.size() == 18);
    }
}

TEST_CASE("reduction-round contract holds for arbitrary maximal factors") {
    // not just 2-factors from the decomposition: maximal <=2-factors with
    // degree-0/1 vertices, arbitrary avoid sets
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Session s = seeded_regular_session(30, 4, 9000 + seed);
        auto active = all_active(30);
        SubFactor f = extend_to_maximal_le2_factor(s.g, SubFactor{});
        auto triple = independent_triple(s.g, active);
        REQUIRE(triple.has_value());
        std::array<Vertex, 3> X = *triple;

        std::vector<Vertex> avoid;
        for (Vertex v = 29; v >= 0 && avoid.size() < 3; --v)
            if (v != X[0] && v != X[1] && v != X[2]) avoid.push_back(v);

        std::vector<int> deg_before(30), f_deg(30);
        for (Vertex v = 0; v < 30; ++v) {
            deg_before[v] = s.g.degree(v);
            f_deg[v] = f.degree(v);
        }

        apply_reduction_round(s, active, X, avoid, f);

        CHECK(active.size() == 27);
        for (Vertex v : active) {
            bool avoided = std::find(avoid.begin(), avoid.end(), v) != avoid.end();
            CHECK(s.g.degree(v) <= deg_before[v] - f_deg[v] + (avoided ? 0 : 1));
        }
        CHECK(s.ledger.audit_walks(s.g).empty());
        CHECK(s.ledger.audit_finalized_distinct().empty());
    }
}

TEST_CASE("base case: one 2-bundle routes direct plus a 2-edge detour") {
    DemandGraph inst = graph_from_pairs(18, {{0, 1}, {0, 1}});
    Session s = make_session(inst);
    base_case_small(s, all_active(18));
    Resolution res = extract_resolution(s.ledger);
    REQUIRE(res.paths.size() == 2);
    CHECK(res.paths[0].path == std::vector<Vertex>{0, 1});
    CHECK(res.paths[1].path == std::vector<Vertex>{0, 2, 1});
    CHECK(verify_ok(inst, res));
}

TEST_CASE("base case: a 5-cycle finalizes directly") {
    DemandGraph inst = graph_from_pairs(18, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Session s = make_session(inst);
    base_case_small(s, all_active(18));
    Resolution res = extract_resolution(s.ledger);
    for (const auto& pe : res.paths) CHECK(pe.path.size() == 2);
    CHECK(verify_ok(inst, res));
}

TEST_CASE("base case: nine 2-bundles use nine distinct helpers") {
    DemandGraph inst = gen_one_factor_bundles(18, 2);
    Session s = make_session(inst);
    base_case_small(s, all_active(18));
    Resolution res = extract_resolution(s.ledger);
    CHECK(verify_ok(inst, res));
    std::set<Vertex> helpers;
    for (const auto& pe : res.paths)
        if (pe.path.size() == 3) helpers.insert(pe.path[1]);
    CHECK(helpers.size() == 9);
}

TEST_CASE("solve_regular: conforming instances below 18 vertices are empty") {
    DemandGraph inst = graph_from_pairs(17, {});
    Session s = make_session(inst);
    solve_regular(s);
    CHECK(extract_resolution(s.ledger).paths.empty());

    DemandGraph bad = graph_from_pairs(17, {{0, 1}});
    Session t = make_session(bad);
    CHECK_THROWS_AS(solve_regular(t), PreconditionError);
}

TEST_CASE("solve_regular: nine 2-bundles on 18 vertices") {
    check_solved(gen_one_factor_bundles(18, 2));
}

TEST_CASE("solve_regular: seeded 4-regular instance on 24 vertices") {
    check_solved(gen_regular(24, 4, 7));
}

TEST_CASE("solve_regular across sizes and shapes") {
    check_solved(gen_regular(25, 4, 3));  // odd n
    check_solved(gen_regular(30, 6, 4));  // r = 6
    check_solved(gen_regular(36, 8, 5));  // two recursion levels
    check_solved(gen_regular(48, 12, 1)); // five recursion levels
    check_solved(gen_one_factor_bundles(24, 4));
    check_solved(graph_from_pairs(24, {{0, 5}, {3, 9}, {9, 12}})); // far below the bound
}

TEST_CASE("solve_regular rejects instances above the bound") {
    Session s = make_session(gen_one_factor_bundles(18, 3));
    CHECK_THROWS_AS(solve_regular(s), PreconditionError);
}

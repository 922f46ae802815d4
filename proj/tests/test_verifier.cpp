#include <doctest.h>

#include "pairsolve/verifier.hpp"
#include "test_support.hpp"

using namespace pairsolve;

namespace {

Resolution make_res(std::vector<std::vector<Vertex>> paths) {
    Resolution r;
    for (std::size_t i = 0; i < paths.size(); ++i)
        r.paths.push_back({static_cast<OriginId>(i), std::move(paths[i])});
    return r;
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
    for (const auto& v : vs)
        if (v.kind == k) return true;
    return false;
}

} // namespace

TEST_CASE("a direct edge plus a detour verifies") {
    DemandGraph inst = graph_from_pairs(3, {{0, 1}, {0, 1}});
    CHECK(verify_ok(inst, make_res({{0, 1}, {0, 2, 1}})));
}

TEST_CASE("reusing a K_n edge is caught") {
    DemandGraph inst = graph_from_pairs(3, {{0, 1}, {0, 1}});
    auto vs = verify(inst, make_res({{0, 1}, {0, 1}}));
    CHECK(has_kind(vs, ViolationKind::RepeatedKnEdge));
}

TEST_CASE("the figure solution verifies") {
    // direct triangle edges, bundle extras through distinct outer vertices,
    // the third (0,1) demand detouring across two outer vertices
    DemandGraph inst = fig4_instance();
    Resolution res = make_res({
        {0, 1},
        {0, 4, 1},
        {0, 5, 3, 1},
        {0, 2},
        {0, 3, 2},
        {1, 2},
        {1, 5, 2},
    });
    CHECK(verify_ok(inst, res));
}

TEST_CASE("endpoint mismatches are caught") {
    DemandGraph inst = graph_from_pairs(4, {{0, 1}});
    auto vs = verify(inst, make_res({{0, 2}}));
    CHECK(has_kind(vs, ViolationKind::EndpointMismatch));
}

TEST_CASE("missing and extra pairs are caught") {
    DemandGraph inst = graph_from_pairs(4, {{0, 1}, {2, 3}});
    Resolution missing = make_res({{0, 1}});
    CHECK(has_kind(verify(inst, missing), ViolationKind::MissingPair));

    Resolution extra = make_res({{0, 1}, {2, 3}});
    extra.paths.push_back({7, {0, 3}});
    CHECK(has_kind(verify(inst, extra), ViolationKind::ExtraPair));
}

TEST_CASE("non-simple paths and range errors are caught") {
    DemandGraph inst = graph_from_pairs(4, {{0, 1}});
    CHECK(has_kind(verify(inst, make_res({{0, 2, 3, 2, 1}})), ViolationKind::NonSimplePath));
    CHECK(has_kind(verify(inst, make_res({{0, 9, 1}})), ViolationKind::VertexOutOfRange));
}

TEST_CASE("violations are collected exhaustively, not fail-fast") {
    DemandGraph inst = graph_from_pairs(4, {{0, 1}, {0, 1}, {2, 3}});
    // two problems at once: duplicate K_n edge and a missing pair
    auto vs = verify(inst, make_res({{0, 1}, {0, 1}}));
    CHECK(has_kind(vs, ViolationKind::RepeatedKnEdge));
    CHECK(has_kind(vs, ViolationKind::MissingPair));
    CHECK(vs.size() >= 2);
}

TEST_CASE("verify is pure") {
    DemandGraph inst = graph_from_pairs(3, {{0, 1}, {0, 1}});
    Resolution res = make_res({{0, 1}, {0, 2, 1}});
    auto a = verify(inst, res);
    auto b = verify(inst, res);
    CHECK(a.size() == b.size());
    CHECK(verify_ok(inst, res));
    CHECK(verify_ok(inst, res));
}

#include "tct/instance.hpp"

#include <doctest.h>

using namespace tct;

TEST_CASE("smallest path instance builds")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}}, 1);
    CHECK(inst.n == 3);
    CHECK(inst.requests.size() == 1);
    CHECK(inst.k == 1);
}

TEST_CASE("a cycle is rejected")
{
    try {
        build_instance(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {});
        FAIL("expected a throw");
    } catch (const BuildError& e) {
        CHECK(e.kind == BuildErrorKind::not_a_tree);
    }
    // same count of edges, still cyclic
    try {
        build_instance(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, {});
        FAIL("expected a throw");
    } catch (const BuildError& e) {
        CHECK(e.kind == BuildErrorKind::not_a_tree);
    }
}

TEST_CASE("a disconnected edge list is rejected")
{
    // 4 vertices, only 2 edges
    CHECK_THROWS_AS(build_instance(4, {{0, 1, 1}, {2, 3, 1}}, {}), BuildError);
}

TEST_CASE("self requests are rejected")
{
    try {
        build_instance(2, {{0, 1, 1}}, {{0, 0}});
        FAIL("expected a throw");
    } catch (const BuildError& e) {
        CHECK(e.kind == BuildErrorKind::self_request);
    }
}

TEST_CASE("out-of-range ids are rejected")
{
    try {
        build_instance(2, {{0, 5, 1}}, {});
        FAIL("expected a throw");
    } catch (const BuildError& e) {
        CHECK(e.kind == BuildErrorKind::bad_vertex_id);
    }
}

TEST_CASE("requests are normalized and deduplicated")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{2, 0}, {0, 2}});
    REQUIRE(inst.requests.size() == 1);
    CHECK(inst.requests[0] == VertexPair{0, 2});
}

TEST_CASE("verify_cut separates exactly the cut requests")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}});
    CHECK(verify_cut(inst, {1}));
    CHECK(!verify_cut(inst, {}));
}

#include "tct/gmwct.hpp"

#include "tct/oracle.hpp"

#include <doctest.h>

using namespace tct;

TEST_CASE("terminal sets expand to all inner pairs")
{
    auto reqs = expand_to_requests({{0, 1, 2}});
    CHECK(reqs == std::vector<VertexPair>({{0, 1}, {0, 2}, {1, 2}}));
    CHECK(expand_to_requests({{3}}).empty());
    CHECK(expand_to_requests({{0, 1}, {1, 0}}) == std::vector<VertexPair>({{0, 1}}));
}

TEST_CASE("leaf rows are finite at exactly one pattern")
{
    DpRow row = dp_leaf(0b01, 2);
    REQUIRE(row.size() == 4);
    CHECK(row[0b01] == 0);
    CHECK(row[0b00] == kDpInf);
    CHECK(row[0b10] == kDpInf);
    CHECK(row[0b11] == kDpInf);

    DpRow both = dp_leaf(0b11, 2);
    CHECK(both[0b11] == 0);
    CHECK(both[0b01] == kDpInf);

    DpRow q1 = dp_leaf(0b1, 1);
    CHECK(q1[1] == 0);
    CHECK(q1[0] == kDpInf);
}

TEST_CASE("one-child rows keep or pay")
{
    // child finite only at pattern 1 with value 0, edge costs 5:
    // keeping passes 1 through, cutting lands at the zero pattern for 5
    DpRow child(2, kDpInf);
    child[1] = 0;
    DpRow row = dp_one_child(child, 5);
    CHECK(row[1] == 0);
    CHECK(row[0] == 5);

    DpRow child2(2, kDpInf);
    child2[0] = 3;
    DpRow row2 = dp_one_child(child2, 100);
    CHECK(row2[0] == 3); // keeping beats paying 100 + 3

    DpRow row3 = dp_one_child(child, 0);
    CHECK(row3[0] == 0); // a free edge makes the zero pattern free
}

TEST_CASE("two-child rows respect the disjointness of kept patterns")
{
    // both children finite only at the same singleton pattern
    DpRow l(2, kDpInf), r(2, kDpInf);
    l[1] = 0;
    r[1] = 0;
    DpRow row = dp_two_children(l, r, 3, 5);
    CHECK(row[1] == 3); // cheaper edge removed, the other child passes through
    CHECK(row[0] == 3 + 5);
    // keeping both would need (1,1) at the same position: never allowed
    DpRow lz(2, kDpInf), rz(2, kDpInf);
    lz[0] = 0;
    rz[1] = 0;
    DpRow mixed = dp_two_children(lz, rz, 7, 9);
    CHECK(mixed[1] == 0); // disjoint patterns combine without cutting
}

TEST_CASE("a two-terminal path cuts its cheaper edge")
{
    Instance inst = build_instance_terminal_sets(
        3, {{0, 1, 2}, {1, 2, 7}}, {{0, 2}}, std::nullopt, true);
    WgmwctResult r = solve_wgmwct(inst);
    CHECK(r.cost == 2);
    REQUIRE(r.cut.size() == 1);
    CHECK(r.cut[0] == 0);
}

TEST_CASE("a single terminal needs nothing")
{
    Instance inst = build_instance_terminal_sets(3, {{0, 1, 4}, {1, 2, 4}}, {{1}},
                                                 std::nullopt, true);
    WgmwctResult r = solve_wgmwct(inst);
    CHECK(r.cost == 0);
    CHECK(r.cut.empty());
}

TEST_CASE("internal terminals and wide vertices are handled")
{
    // center 0 is a terminal and has four children
    Instance inst = build_instance_terminal_sets(
        5, {{0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 6}}, {{0, 1}, {2, 3}},
        std::nullopt, true);
    WgmwctResult r = solve_wgmwct(inst);
    OracleCut oc = brute_force_min_cut(inst);
    CHECK(r.cost == oc.cost);
    CHECK(verify_cut(inst, r.cut));
}

TEST_CASE("preprocessing yields a binary terminal-leaf tree")
{
    Instance inst = build_instance_terminal_sets(
        6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}},
        {{1, 2}, {3, 4}}, std::nullopt, true);
    PreprocessedTree t = preprocess(inst);
    REQUIRE(!t.trivial);
    for (Vertex v = 0; v < t.n; ++v) {
        CHECK(t.children[v].size() <= 2);
        if (t.children[v].empty() && (t.parent[v] >= 0 || v == t.root))
            CHECK(t.term_mask[v] != 0);
    }
}

TEST_CASE("the dynamic program matches the oracle on random weighted instances")
{
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        GenSpec spec;
        spec.seed = seed * 13 + 1;
        spec.edges = 3 + (int)(seed % 12);
        spec.weighted = true;
        spec.max_cost = 100;
        spec.q = 1 + (int)(seed % 3);
        Instance inst = generate(spec);
        WgmwctResult r = solve_wgmwct(inst);
        OracleCut oc = brute_force_min_cut(inst);
        INFO("seed ", spec.seed);
        CHECK(r.cost == oc.cost);
        CHECK(verify_cut(inst, r.cut));
        CHECK(cut_cost(inst, r.cut) == r.cost);
    }
}

TEST_CASE("unit costs agree with the parameterized route")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenSpec spec;
        spec.seed = seed * 17 + 3;
        spec.edges = 3 + (int)(seed % 10);
        spec.q = 1 + (int)(seed % 3);
        Instance inst = generate(spec);
        WgmwctResult dp = solve_wgmwct(inst);
        SolveResult fpt = solve_gmwct_min(inst);
        INFO("seed ", spec.seed);
        CHECK(dp.cost == fpt.cut->size());
    }
}

TEST_CASE("adjacent same-set terminals cut their edge")
{
    Instance inst = build_instance_terminal_sets(2, {{0, 1, 1}}, {{0, 1}},
                                                 std::nullopt, false);
    SolveResult r = solve_gmwct_via_mct(inst, 1);
    REQUIRE(r.cut.has_value());
    CHECK(r.cut->size() == 1);
}

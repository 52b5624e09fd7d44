#include "tct/solver.hpp"

#include "tct/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace tct;

TEST_CASE("the branching constant solves its polynomial")
{
    double rho = search_tree_rho();
    CHECK(std::abs(std::pow(rho, 4) - 2 * std::pow(rho, 2) - 1) < 1e-12);
    CHECK(rho == doctest::Approx(1.5537739740300374).epsilon(1e-12));
}

TEST_CASE("no requests solve at k = 0")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {});
    SolveResult r = solve_decision(inst, 0);
    REQUIRE(r.cut.has_value());
    CHECK(r.cut->empty());
}

TEST_CASE("the star triangle needs two cuts")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}},
                                   {{1, 2}, {1, 3}, {2, 3}});
    CHECK(!solve_decision(inst, 1).cut.has_value());
    SolveResult r = solve_decision(inst, 2);
    REQUIRE(r.cut.has_value());
    CHECK(r.cut->size() <= 2);
    CHECK(verify_cut(inst, *r.cut));
}

TEST_CASE("a single unit request is one cut")
{
    Instance inst = build_instance(2, {{0, 1, 1}}, {{0, 1}});
    SolveResult r = solve_min(inst);
    CHECK(r.cut->size() == 1);
}

TEST_CASE("disjoint unit requests cost one each")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}},
        {{0, 1}, {2, 3}, {4, 5}});
    SolveResult r = solve_min(inst);
    CHECK(r.cut->size() == 3);
    CHECK(verify_cut(inst, *r.cut));
}

TEST_CASE("the special quadruple solves at its optimum")
{
    GenSpec spec;
    spec.mode = "gadget";
    spec.gadget = "special-quadruple";
    Instance inst = generate(spec);
    OracleCut oc = brute_force_min_cut(inst);
    SolveResult r = solve_min(inst);
    CHECK(r.cut->size() == oc.cost);
    CHECK(verify_cut(inst, *r.cut));
    CHECK(r.stats.fallback_branches == 0);
}

TEST_CASE("solver matches the oracle on random instances")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenSpec spec;
        spec.seed = seed * 31 + 7;
        spec.edges = 4 + (int)(seed % 13);
        spec.requests = 1 + (int)(seed % 12);
        Instance inst = generate(spec);
        OracleCut oc = brute_force_min_cut(inst);
        SolveResult r = solve_min(inst);
        INFO("seed ", spec.seed, " edges ", spec.edges, " requests ",
             inst.requests.size());
        REQUIRE(r.cut.has_value());
        CHECK(r.cut->size() == oc.cost);
        CHECK(verify_cut(inst, *r.cut));
        CHECK(r.cut->size() <= (size_t)r.stats.initial_k);
        CHECK(r.stats.fallback_branches == 0);
        CHECK((double)r.stats.leaves <=
              std::ceil(std::pow(search_tree_rho(), (double)oc.cost)) + 1e-9);
    }
}

TEST_CASE("decisions are monotone in k")
{
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edges = 5 + (int)(seed % 8);
        spec.requests = 2 + (int)(seed % 6);
        Instance inst = generate(spec);
        int opt = (int)brute_force_min_cut(inst).cost;
        for (int k = 0; k <= opt + 1; ++k) {
            bool yes = solve_decision(inst, k).cut.has_value();
            CHECK(yes == (k >= opt));
        }
    }
}

TEST_CASE("caterpillars and stars agree with the oracle")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        for (const char* mode : {"star", "caterpillar"}) {
            GenSpec spec;
            spec.seed = seed;
            spec.mode = mode;
            spec.edges = 5 + (int)(seed % 9);
            spec.requests = 2 + (int)(seed % 9);
            Instance inst = generate(spec);
            OracleCut oc = brute_force_min_cut(inst);
            SolveResult r = solve_min(inst);
            INFO(mode, " seed ", seed);
            CHECK(r.cut->size() == oc.cost);
            CHECK(r.stats.fallback_branches == 0);
        }
    }
}

TEST_CASE("each gadget solves to its oracle optimum without fallbacks")
{
    for (const std::string& name : gadget_names()) {
        GenSpec spec;
        spec.mode = "gadget";
        spec.gadget = name;
        Instance inst = generate(spec);
        OracleCut oc = brute_force_min_cut(inst);
        SolveResult r = solve_min(inst);
        INFO("gadget ", name);
        REQUIRE(r.cut.has_value());
        CHECK(r.cut->size() == oc.cost);
        CHECK(verify_cut(inst, *r.cut));
        CHECK(r.stats.fallback_branches == 0);
    }
}

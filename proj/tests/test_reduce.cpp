#include "tct/reduce.hpp"

#include "tct/oracle.hpp"

#include <doctest.h>

using namespace tct;

namespace {

WorkingForest forest_of(const Instance& inst, long long budget = 1000)
{
    return WorkingForest(inst, budget);
}

} // namespace

TEST_CASE("an edge off every request path is contracted")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 1}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_useless_edge(f, rc) == ReduceOutcome::changed);
    CHECK(!f.live(2));
    CHECK(rc.get("useless_edge") == 1);
}

TEST_CASE("a third leaf with no requests is absorbed")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}, {{1, 2}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_useless_edge(f, rc) == ReduceOutcome::changed);
    CHECK(f.live_vertices().size() == 3);
}

TEST_CASE("useless-edge is a fixpoint when every edge serves a request")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_useless_edge(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("unit requests are cut and decrement the budget")
{
    Instance inst = build_instance(2, {{0, 1, 1}}, {{0, 1}});
    WorkingForest f(inst, 1);
    RuleCounters rc;
    CHECK(rule_unit_request(f, rc) == ReduceOutcome::changed);
    CHECK(f.budget() == 0);
    CHECK(f.requests().empty());
}

TEST_CASE("two unit requests exceed a budget of one")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {2, 3, 1}, {1, 2, 1}},
                                   {{0, 1}, {2, 3}});
    WorkingForest f(inst, 1);
    RuleCounters rc;
    CHECK(rule_unit_request(f, rc) == ReduceOutcome::infeasible);
}

TEST_CASE("subtree isolation contracts the top edge of a closed subtree")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {0, 5, 1}},
        {{3, 4}, {3, 5}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_subtree_isolation(f, rc) == ReduceOutcome::changed);
    CHECK(f.find(2) != 2); // the top edge of T_2 was contracted
}

TEST_CASE("a crossing request blocks subtree isolation")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_subtree_isolation(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("leaves in no minimum cover are contracted")
{
    // even path 1-2-3 in the star's request graph: only 2 is ever in a cover
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}},
                                   {{1, 2}, {2, 3}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    // the even-path cut fires first in fixpoint order; call exclusion directly
    CHECK(rule_vc_exclusion(f, rc) == ReduceOutcome::changed);
    CHECK(!f.live(1));
    CHECK(!f.live(3));
    CHECK(f.live(2));
}

TEST_CASE("an isolated edge excludes nobody")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {0, 2, 1}}, {{1, 2}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_vc_exclusion(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("a triangle excludes nobody")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}},
                                   {{1, 2}, {2, 3}, {1, 3}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_vc_exclusion(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("the unique cover of an even path is cut")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}},
                                   {{1, 2}, {2, 3}});
    WorkingForest f(inst, 2);
    RuleCounters rc;
    CHECK(rule_even_path_cut(f, rc) == ReduceOutcome::changed);
    CHECK(f.parent(2) < 0); // 2 detached from the star
    CHECK(f.budget() == 1);
    CHECK(f.requests().empty());
}

TEST_CASE("a five-vertex even path cuts its two interior leaves")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}},
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    WorkingForest f(inst, 5);
    RuleCounters rc;
    CHECK(rule_even_path_cut(f, rc) == ReduceOutcome::changed);
    CHECK(f.parent(2) < 0);
    CHECK(f.parent(4) < 0);
    CHECK(f.budget() == 3);
}

TEST_CASE("odd paths are not touched by the even-path rule")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {0, 2, 1}}, {{1, 2}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_even_path_cut(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("a cover catching every cross request contracts the parent edge")
{
    Instance inst = build_instance(5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}},
                                   {{2, 3}, {2, 4}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_cross_covered_contract(f, rc) == ReduceOutcome::changed);
    CHECK(f.find(1) == 0);
}

TEST_CASE("two separate cross targets keep the parent edge")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}, {0, 5, 1}},
        {{2, 3}, {2, 4}, {3, 5}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_cross_covered_contract(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("a grandparent request forces the child's cut")
{
    Instance inst = build_instance(
        5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}},
        {{2, 3}, {2, 0}, {3, 4}});
    WorkingForest f(inst, 4);
    RuleCounters rc;
    CHECK(rule_grandparent_request(f, rc) == ReduceOutcome::changed);
    CHECK(f.parent(2) < 0); // 2 detached
}

TEST_CASE("an uncle request is not a grandparent request")
{
    Instance inst = build_instance(
        5, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 1}},
        {{2, 3}, {2, 4}, {3, 4}});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    CHECK(rule_grandparent_request(f, rc) == ReduceOutcome::fixpoint);
}

TEST_CASE("an empty request set reduces to single vertices")
{
    Instance inst = build_instance(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}, {});
    WorkingForest f = forest_of(inst);
    RuleCounters rc;
    reduce_to_fixpoint(f, rc);
    CHECK(f.live_vertices().size() == 1);
    CHECK(check_reduced(f).empty());
}

TEST_CASE("a unit-request chain consumes exactly its budget")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}},
                                   {{0, 1}, {1, 2}, {2, 3}});
    WorkingForest f(inst, 3);
    RuleCounters rc;
    CHECK(reduce_to_fixpoint(f, rc) == ReduceOutcome::changed);
    CHECK(f.budget() == 0);
    CHECK(f.requests().empty());
}

TEST_CASE("fixpoints are idempotent and pass the reduced check")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edges = 4 + (int)(seed % 10);
        spec.requests = 1 + (int)(seed % 8);
        Instance inst = generate(spec);
        WorkingForest f = forest_of(inst);
        RuleCounters rc;
        reduce_to_fixpoint(f, rc);
        INFO("seed ", seed);
        for (const std::string& v : check_reduced(f)) {
            INFO(v);
            CHECK(false);
        }
        CHECK(reduce_to_fixpoint(f, rc) == ReduceOutcome::fixpoint);
        f.check_invariants();
    }
}

TEST_CASE("reduction preserves the optimum")
{
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edges = 4 + (int)(seed % 9);
        spec.requests = 1 + (int)(seed % 7);
        Instance inst = generate(spec);
        std::uint64_t before = brute_force_min_cut(inst).cost;

        WorkingForest f = forest_of(inst);
        RuleCounters rc;
        reduce_to_fixpoint(f, rc);
        std::uint64_t forced = f.committed_cut().size();

        // per component, rebuild an instance and add up the oracle optima
        std::uint64_t after = 0;
        std::set<Vertex> seen;
        for (Vertex r : f.roots()) {
            std::vector<Vertex> comp = f.component_vertices(r);
            std::map<Vertex, int> id;
            for (Vertex v : comp) id[v] = (int)id.size();
            std::vector<Edge> edges;
            for (Vertex v : comp)
                if (f.parent(v) >= 0) edges.push_back({id[v], id[f.parent(v)], 1});
            std::vector<VertexPair> reqs;
            for (auto [a, b] : f.requests())
                if (id.count(a) && id.count(b)) reqs.push_back(norm_pair(id[a], id[b]));
            if (reqs.empty()) continue;
            Instance sub = build_instance((int)comp.size(), edges, reqs);
            after += brute_force_min_cut(sub).cost;
        }
        INFO("seed ", seed);
        CHECK(before == after + forced);
    }
}

#include "tct/forest.hpp"

#include <doctest.h>

#include <random>

using namespace tct;

namespace {

Instance path3()
{
    return build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}});
}

} // namespace

TEST_CASE("a path roots at its internal vertex")
{
    Instance inst = path3();
    WorkingForest f(inst, 5);
    CHECK(f.is_root(1));
    CHECK(f.parent(0) == 1);
    CHECK(f.parent(2) == 1);
}

TEST_CASE("a single edge roots at the lower id")
{
    Instance inst = build_instance(2, {{0, 1, 1}}, {{0, 1}});
    WorkingForest f(inst, 5);
    CHECK(f.is_root(0));
}

TEST_CASE("a star roots at its center")
{
    Instance inst = build_instance(5, {{4, 0, 1}, {4, 1, 1}, {4, 2, 1}, {4, 3, 1}}, {});
    WorkingForest f(inst, 5);
    CHECK(f.is_root(4));
    CHECK(f.important(4));
}

TEST_CASE("cutting separates and purges requests")
{
    Instance inst = path3();
    WorkingForest f(inst, 1);
    REQUIRE(f.cut_child(0) == EditStatus::ok);
    CHECK(f.requests().empty());
    CHECK(f.budget() == 0);
    CHECK(f.committed_cut() == std::vector<EdgeId>{0});
    CHECK(verify_cut(inst, f.committed_cut()));
    f.check_invariants();
}

TEST_CASE("cutting with no budget reports exhaustion")
{
    Instance inst = path3();
    WorkingForest f(inst, 0);
    CHECK(f.cut_child(0) == EditStatus::budget_exhausted);
}

TEST_CASE("contraction re-addresses requests to the surviving vertex")
{
    Instance inst = path3();
    WorkingForest f(inst, 5);
    REQUIRE(f.contract_child(0) == EditStatus::ok);
    CHECK(f.find(0) == 1);
    CHECK(f.requests().count(norm_pair(1, 2)) == 1);
    f.check_invariants();
}

TEST_CASE("contracting a unit request is infeasible")
{
    Instance inst = build_instance(2, {{0, 1, 1}}, {{0, 1}});
    WorkingForest f(inst, 5);
    CHECK(f.contract_child(1) == EditStatus::infeasible_branch);
    // the forest is untouched and still usable
    CHECK(f.requests().size() == 1);
    f.check_invariants();
}

TEST_CASE("contracting a request-free leaf only absorbs it")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 1}});
    WorkingForest f(inst, 5);
    REQUIRE(f.contract_child(2) == EditStatus::ok);
    CHECK(f.requests().count(norm_pair(0, 1)) == 1);
    CHECK(!f.live(2));
}

TEST_CASE("replaying the edit log reproduces the forest")
{
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 4 + (int)(rng() % 8);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.push_back({(int)(rng() % v), v, 1});
        std::vector<VertexPair> reqs;
        for (int i = 0; i < 4; ++i) {
            int a = (int)(rng() % n), b = (int)(rng() % n);
            if (a != b) reqs.push_back(norm_pair(a, b));
        }
        Instance inst = build_instance(n, edges, reqs);
        WorkingForest f(inst, 100);
        for (int step = 0; step < 6; ++step) {
            std::vector<Vertex> cand;
            for (Vertex v : f.live_vertices())
                if (f.parent(v) >= 0) cand.push_back(v);
            if (cand.empty()) break;
            Vertex v = cand[rng() % cand.size()];
            if (rng() % 2) {
                f.cut_child(v);
            } else if (f.contract_child(v) == EditStatus::infeasible_branch) {
                f.cut_child(v);
            }
        }
        f.check_invariants();
        WorkingForest g = replay_log(inst, f.log(), 100);
        CHECK(same_forest(f, g));
    }
}

TEST_CASE("budget accounting holds under edits")
{
    Instance inst = build_instance(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}},
                                   {{1, 2}, {3, 4}});
    WorkingForest f(inst, 3);
    long long k0 = f.budget() + (long long)f.committed_cut().size();
    f.cut_child(1);
    CHECK(f.budget() + (long long)f.committed_cut().size() == k0);
    f.cut_child(3);
    CHECK(f.budget() + (long long)f.committed_cut().size() == k0);
    CHECK(f.requests().empty());
    CHECK(verify_cut(inst, f.committed_cut()));
}

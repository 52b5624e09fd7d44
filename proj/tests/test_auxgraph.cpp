#include "tct/auxgraph.hpp"

#include "tct/oracle.hpp"

#include <doctest.h>

#include <map>

using namespace tct;

namespace {

LeafGraph graph_of(std::vector<Vertex> nodes, std::vector<VertexPair> edges)
{
    LeafGraph g;
    g.nodes = std::move(nodes);
    for (Vertex v : g.nodes) g.adj[v];
    for (auto [a, b] : edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return g;
}

int oracle_vc(const LeafGraph& g)
{
    std::map<Vertex, int> id;
    for (Vertex v : g.nodes) id[v] = (int)id.size();
    std::vector<std::vector<int>> adj(id.size());
    for (Vertex v : g.nodes)
        for (Vertex w : g.neighbors(v)) adj[id[v]].push_back(id[w]);
    return brute_force_vc(adj);
}

bool is_cover(const LeafGraph& g, const std::vector<Vertex>& cover)
{
    std::set<Vertex> in(cover.begin(), cover.end());
    for (Vertex v : g.nodes)
        for (Vertex w : g.neighbors(v))
            if (!in.count(v) && !in.count(w)) return false;
    return true;
}

} // namespace

TEST_CASE("cover of a four-vertex path pinned at an endpoint")
{
    LeafGraph g = graph_of({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    VcResult vc = min_vc_deg2(g);
    CHECK(vc.tau == 2);
    REQUIRE(vc.shapes.size() == 1);
    std::vector<Vertex> ca = path_cover_with_endpoint(vc.shapes[0], 0);
    CHECK(ca == std::vector<Vertex>({0, 2}));
}

TEST_CASE("an even path has the unique interior cover")
{
    LeafGraph g = graph_of({0, 1, 2}, {{0, 1}, {1, 2}});
    VcResult vc = min_vc_deg2(g);
    CHECK(vc.tau == 1);
    CHECK(vc.cover == std::vector<Vertex>{1});
}

TEST_CASE("a five-cycle needs three vertices")
{
    LeafGraph g = graph_of({0, 1, 2, 3, 4},
                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    VcResult vc = min_vc_deg2(g);
    CHECK(vc.tau == 3);
    CHECK(vc.tau == oracle_vc(g));
    CHECK(is_cover(g, vc.cover));
}

TEST_CASE("degree three is refused")
{
    LeafGraph g = graph_of({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(min_vc_deg2(g), DegreeTooHigh);
}

TEST_CASE("an even cycle has exactly two minimum covers")
{
    LeafGraph g = graph_of({5, 6, 7, 8}, {{5, 6}, {6, 7}, {7, 8}, {8, 5}});
    VcResult vc = min_vc_deg2(g);
    REQUIRE(vc.shapes.size() == 1);
    auto [a, b] = even_cycle_covers(vc.shapes[0]);
    CHECK((int)a.size() == vc.tau);
    CHECK((int)b.size() == vc.tau);
    CHECK(is_cover(g, a));
    CHECK(is_cover(g, b));
    CHECK(a != b);
}

TEST_CASE("forced-membership covers match brute force across shapes")
{
    // paths and cycles up to 8 vertices, forcing each single vertex
    for (int len = 1; len <= 8; ++len) {
        std::vector<Vertex> nodes;
        std::vector<VertexPair> path_edges, cycle_edges;
        for (int i = 0; i < len; ++i) nodes.push_back(i);
        for (int i = 0; i + 1 < len; ++i) path_edges.push_back({i, i + 1});
        LeafGraph p = graph_of(nodes, path_edges);
        int tau = min_vc_deg2(p).tau;
        for (Vertex v : nodes) {
            int forced = vc_with_forced(p, {v});
            CHECK(forced >= tau);
            CHECK(in_some_min_vc(p, v) == (forced == tau));
        }
        if (len >= 3) {
            cycle_edges = path_edges;
            cycle_edges.push_back({len - 1, 0});
            LeafGraph c = graph_of(nodes, cycle_edges);
            int tc = min_vc_deg2(c).tau;
            CHECK(tc == oracle_vc(c));
            for (Vertex v : nodes) CHECK(vc_with_forced(c, {v}) == tc);
        }
    }
}

namespace {

Instance quad_instance()
{
    // parent 0, important 1 with children 3 and 4, leaf sibling 2
    return build_instance(5, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}},
                          {{3, 4}, {3, 2}, {4, 2}, {1, 2}});
}

} // namespace

TEST_CASE("request graph over leaf children")
{
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}},
                                   {{1, 2}, {2, 3}});
    WorkingForest f(inst, 5);
    LeafGraph g = build_gu(f, 0);
    CHECK(g.nodes == std::vector<Vertex>({1, 2, 3}));
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("a vertex without leaf children has an empty graph")
{
    Instance inst = build_instance(3, {{0, 1, 1}, {1, 2, 1}}, {{0, 2}});
    WorkingForest f(inst, 5);
    // root is 1; vertex 0 is a leaf with no children at all
    LeafGraph g = build_gu(f, 0);
    CHECK(g.nodes.empty());
}

TEST_CASE("the figure gadget is detected as a special quadruple")
{
    Instance inst = quad_instance();
    WorkingForest f(inst, 5);
    REQUIRE(f.is_root(0));
    auto quads = detect_special_quadruples(f, 0);
    REQUIRE(quads.size() == 1);
    CHECK(quads[0].w == 1);
    CHECK(quads[0].w_prime == 2);
    CHECK(quads[0].u == 3);
    CHECK(quads[0].v == 4);
    // all members excluded from the star graph
    LeafGraph gs = build_gstar(f, 0, quads);
    CHECK(gs.nodes.empty());
}

TEST_CASE("an extra request from the leaf partner breaks the quadruple")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {0, 5, 1}},
        {{3, 4}, {3, 2}, {4, 2}, {1, 2}, {2, 5}});
    WorkingForest f(inst, 5);
    CHECK(detect_special_quadruples(f, 0).empty());
}

TEST_CASE("three children break the quadruple")
{
    Instance inst = build_instance(
        6, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}},
        {{3, 4}, {3, 2}, {4, 2}, {1, 2}});
    WorkingForest f(inst, 5);
    CHECK(detect_special_quadruples(f, 0).empty());
}

TEST_CASE("star graph edges and the group tags")
{
    // two leaf children with a request form a gp2 edge
    Instance inst = build_instance(4, {{0, 1, 1}, {0, 2, 1}, {2, 3, 1}},
                                   {{1, 3}, {1, 2}});
    // use a hand-rooted forest: root 0, children 1 (leaf) and 2; 2 has leaf 3
    WorkingForest f(inst, 5);
    LeafGraph gs = build_gstar(f, 0);
    CHECK(gs.has(1));
    CHECK(gs.has(3));
    CHECK(gs.degree(1) >= 1);
}

TEST_CASE("group classification over a mixed zone")
{
    // important 2 under 1 carries a gp1 edge and a gp3 path to leaf children
    Instance inst = build_instance(
        10,
        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}, {2, 6, 1},
         {1, 7, 1}, {1, 8, 1}, {0, 9, 1}},
        {{3, 4}, {5, 6}, {5, 7}, {6, 8}, {7, 9}});
    WorkingForest f(inst, 10);
    auto quads = detect_special_quadruples(f, 1);
    CHECK(quads.empty());
    LeafGraph gs = build_gstar(f, 1, quads);
    auto tags = classify_groups(gs, quads, f);
    REQUIRE(tags.size() == 2);
    bool saw_gp1 = false, saw_gp3 = false;
    for (const GroupTag& t : tags) {
        if (t.kind == GroupKind::gp1) {
            saw_gp1 = true;
            CHECK(t.important_owner == 2);
        }
        if (t.kind == GroupKind::gp3) saw_gp3 = true;
    }
    CHECK(saw_gp1);
    CHECK(saw_gp3);
}

TEST_CASE("a triangle inside one request graph is gp7")
{
    Instance inst = build_instance(
        11,
        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}, {2, 6, 1},
         {2, 7, 1}, {1, 8, 1}, {1, 9, 1}, {0, 10, 1}},
        {{3, 4}, {4, 5}, {3, 5}, {6, 7}, {6, 8}, {7, 9}, {8, 10}});
    WorkingForest f(inst, 10);
    auto quads = detect_special_quadruples(f, 1);
    LeafGraph gs = build_gstar(f, 1, quads);
    auto tags = classify_groups(gs, quads, f);
    bool saw_gp7 = false;
    for (const GroupTag& t : tags)
        if (t.kind == GroupKind::gp7) {
            saw_gp7 = true;
            CHECK(t.important_owner == 2);
            CHECK(t.members.size() == 3);
        }
    CHECK(saw_gp7);
}

TEST_CASE("every star-graph vertex carries exactly one tag")
{
    Instance inst = build_instance(
        10,
        {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}, {2, 6, 1},
         {1, 7, 1}, {1, 8, 1}, {0, 9, 1}},
        {{3, 4}, {5, 6}, {5, 7}, {6, 8}, {7, 9}});
    WorkingForest f(inst, 10);
    auto quads = detect_special_quadruples(f, 1);
    LeafGraph gs = build_gstar(f, 1, quads);
    auto tags = classify_groups(gs, quads, f);
    std::map<Vertex, int> seen;
    for (const GroupTag& t : tags)
        for (Vertex v : t.members) ++seen[v];
    for (Vertex v : gs.nodes) CHECK(seen[v] == 1);
}

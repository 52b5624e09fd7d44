#pragma once

#include "tct/forest.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace tct {

struct DegreeTooHigh : std::runtime_error {
    DegreeTooHigh() : std::runtime_error("graph has a vertex of degree > 2") {}
};

struct UnclassifiableComponent : std::logic_error {
    explicit UnclassifiableComponent(const std::string& what) : std::logic_error(what) {}
};

// Request graph over a set of leaves: G_u (leaf children of u) or the star
// graph over leaf children and grandchildren of p. Vertices are live ids.
struct LeafGraph {
    Vertex owner = -1;
    std::vector<Vertex> nodes; // sorted
    std::map<Vertex, std::vector<Vertex>> adj;

    bool has(Vertex v) const { return adj.count(v) != 0; }
    int degree(Vertex v) const
    {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : (int)it->second.size();
    }
    int max_degree() const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj.at(v); }
};

enum class ShapeKind { path, cycle };

struct ComponentShape {
    ShapeKind kind = ShapeKind::path;
    // path: endpoint-to-endpoint, lower-id endpoint first (single vertex ok);
    // cycle: starts at the lowest id, second element is its lower-id neighbor
    std::vector<Vertex> seq;
    int length() const
    {
        return kind == ShapeKind::path ? (int)seq.size() - 1 : (int)seq.size();
    }
    bool contains(Vertex v) const;
};

std::vector<ComponentShape> decompose_deg2(const LeafGraph& g); // throws DegreeTooHigh

struct VcResult {
    int tau = 0;
    std::vector<Vertex> cover; // one canonical minimum cover, sorted
    std::vector<ComponentShape> shapes;
};

// Minimum vertex cover on a max-degree-2 graph. Canonical cover choices:
// lower-id endpoint for isolated edges and odd paths, alternating interior
// for even paths, the cover containing the lowest id for cycles.
VcResult min_vc_deg2(const LeafGraph& g);

// The unique minimum cover of an odd-length path that contains endpoint e.
std::vector<Vertex> path_cover_with_endpoint(const ComponentShape& path, Vertex e);
// The unique minimum cover of an even-length path (alternating interior).
std::vector<Vertex> even_path_cover(const ComponentShape& path);
// The two minimum covers of an even cycle.
std::pair<std::vector<Vertex>, std::vector<Vertex>> even_cycle_covers(const ComponentShape& c);

// Size of a minimum vertex cover constrained to contain `forced`
// (forced vertices must belong to the graph). Exact DP over paths/cycles.
int vc_with_forced(const LeafGraph& g, const std::set<Vertex>& forced);

bool in_some_min_vc(const LeafGraph& g, Vertex v);

LeafGraph build_gu(const WorkingForest& f, Vertex u);

struct SpecialQuadruple {
    Vertex w, w_prime, u, v;
};

std::vector<SpecialQuadruple> detect_special_quadruples(const WorkingForest& f, Vertex p);

// Star graph over leaf children and (leaf) grandchildren of p, with special
// quadruple members excluded.
LeafGraph build_gstar(const WorkingForest& f, Vertex p);
LeafGraph build_gstar(const WorkingForest& f, Vertex p,
                      const std::vector<SpecialQuadruple>& quads);

enum class GroupKind { gp1, gp2, gp3, gp4, gp5, gp6, gp7 };

struct GroupTag {
    GroupKind kind;
    std::vector<Vertex> members;
    Vertex important_owner = -1; // for gp1/gp7
    ComponentShape shape;        // empty for gp6
};

const char* group_name(GroupKind k);

// Tags every star-graph component gp1-gp5/gp7; gp6 tags come from the
// quadruples. Throws UnclassifiableComponent when a shape that the earlier
// phases must have eliminated is still present.
std::vector<GroupTag> classify_groups(const LeafGraph& gstar,
                                      const std::vector<SpecialQuadruple>& quads,
                                      const WorkingForest& f);

} // namespace tct

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tct {

using Vertex = int;
using EdgeId = int;

enum class Mode { mct, gmwct, wgmwct };

struct Edge {
    Vertex u = -1;
    Vertex v = -1;
    std::uint64_t cost = 1; // meaningful in wgmwct mode only
};

using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair norm_pair(Vertex a, Vertex b)
{
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

enum class BuildErrorKind { not_a_tree, bad_vertex_id, self_request };

struct BuildError : std::runtime_error {
    BuildErrorKind kind;
    BuildError(BuildErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k)
    {
    }
};

// Immutable problem statement. Vertices are 0-based internally.
// `requests` is always populated: in gmwct/wgmwct mode it is derived from the
// terminal sets (all pairs within each set).
struct Instance {
    Mode mode = Mode::mct;
    int n = 0;
    std::vector<Edge> edges;             // exactly n-1, forms a tree
    std::vector<VertexPair> requests;    // normalized, sorted, unique
    std::vector<std::vector<Vertex>> terminal_sets;
    std::optional<int> k;

    std::uint64_t edge_cost(EdgeId e) const { return edges[e].cost; }
};

// Validates that `edges` is a tree on n vertices and that requests are sane.
Instance build_instance(int n, std::vector<Edge> edges,
                        std::vector<VertexPair> requests,
                        std::optional<int> k = std::nullopt);

// true iff removing `cut` separates every request (component labeling).
bool verify_cut(const Instance& inst, const std::vector<EdgeId>& cut);

std::uint64_t cut_cost(const Instance& inst, const std::vector<EdgeId>& cut);

} // namespace tct

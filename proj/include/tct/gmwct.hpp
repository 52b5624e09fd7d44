#pragma once

#include "tct/instance.hpp"
#include "tct/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tct {

// All pairs within each terminal set, deduplicated across sets.
std::vector<VertexPair> expand_to_requests(const std::vector<std::vector<Vertex>>& sets);

// Validated instance with terminal sets; requests are derived.
Instance build_instance_terminal_sets(int n, std::vector<Edge> edges,
                                      std::vector<std::vector<Vertex>> sets,
                                      std::optional<int> k, bool weighted);

constexpr int kMaxTerminalSets = 20;

struct GmwctError : std::runtime_error {
    explicit GmwctError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rooted binary tree in which every leaf is a terminal and every terminal is
// a leaf. Synthetic vertices/edges come from pendant terminals and from
// binarization chains; synthetic edges carry a cost no optimal cut pays.
struct PreprocessedTree {
    int n = 0;
    Vertex root = -1;
    std::vector<Vertex> parent;
    std::vector<std::vector<Vertex>> children;
    std::vector<std::uint64_t> up_cost;     // cost of the edge to the parent
    std::vector<EdgeId> up_original;        // original edge id, -1 if synthetic
    std::vector<std::uint32_t> term_mask;   // terminal-set membership per vertex
    std::uint64_t sentinel = 0;             // the synthetic edge cost
    int q = 0;
    bool trivial = false;                   // no separation needed at all
};

PreprocessedTree preprocess(const Instance& inst);

struct WgmwctResult {
    std::uint64_t cost = 0;
    std::vector<EdgeId> cut; // original edge ids, sorted
};

// Connection-pattern dynamic program, O(3^q n); exact minimum cost.
WgmwctResult solve_wgmwct(const Instance& inst);

// Unweighted route through the parameterized solver.
SolveResult solve_gmwct_via_mct(const Instance& inst, int k);
SolveResult solve_gmwct_min(const Instance& inst);

// Exposed for tests: the per-vertex DP row combinators.
using DpRow = std::vector<std::uint64_t>; // indexed by connection pattern
constexpr std::uint64_t kDpInf = ~0ull;

DpRow dp_leaf(std::uint32_t term_mask, int q);
DpRow dp_one_child(const DpRow& child, std::uint64_t edge_cost);
DpRow dp_two_children(const DpRow& left, const DpRow& right, std::uint64_t cost_left,
                      std::uint64_t cost_right);

} // namespace tct

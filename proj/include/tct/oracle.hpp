#pragma once

#include "tct/instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tct {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleCut {
    std::uint64_t cost = 0;          // = size in unweighted mode
    std::vector<EdgeId> cut;         // lexicographically first optimum
};

// Exhaustive minimum cut: subsets by size then lexicographic order in
// unweighted mode, full enumeration with cost minimization in weighted mode.
// Guarded to at most 20 edges.
OracleCut brute_force_min_cut(const Instance& inst);

// Minimum vertex cover size by subset enumeration, at most 20 vertices.
// adj[i] lists neighbors of vertex i.
int brute_force_vc(const std::vector<std::vector<int>>& adj);

struct GenSpec {
    std::uint64_t seed = 1;
    int edges = 8;            // tree edges, so edges+1 vertices
    int requests = 4;
    std::string mode = "random-tree"; // random-tree | star | caterpillar | gadget
    std::string gadget;               // gadget name when mode == "gadget"
    bool weighted = false;
    std::uint64_t max_cost = 100;
    int q = 0; // terminal sets; > 0 switches to gmwct/wgmwct output
};

struct BadSpec : std::runtime_error {
    explicit BadSpec(const std::string& msg) : std::runtime_error(msg) {}
};

// Deterministic for a fixed spec. Gadget mode emits named constructions that
// drive specific solver rules; gadget_names() lists them.
Instance generate(const GenSpec& spec);

const std::vector<std::string>& gadget_names();

} // namespace tct

#pragma once

#include "tct/forest.hpp"
#include "tct/reduce.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tct {

struct CaseAnalysisViolation : std::logic_error {
    explicit CaseAnalysisViolation(const std::string& what) : std::logic_error(what) {}
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    int max_depth = 0;
    std::uint64_t fallback_branches = 0;
    int initial_k = 0;
    RuleCounters rules;

    void merge(const SearchStats& o)
    {
        nodes += o.nodes;
        leaves += o.leaves;
        max_depth = std::max(max_depth, o.max_depth);
        fallback_branches += o.fallback_branches;
        rules.merge(o.rules);
    }
};

struct SolveResult {
    std::optional<std::vector<EdgeId>> cut; // sorted original edge ids
    SearchStats stats;
};

// positive root of x^4 - 2x^2 - 1, the branching factor of the search
double search_tree_rho();

// Decision problem: a cut of size <= k, or nothing if none exists.
SolveResult solve_decision(const Instance& inst, int k);

// Optimization wrapper: smallest k admitting a cut, by increasing k from 0.
// The returned stats are those of the successful decision run.
SolveResult solve_min(const Instance& inst);

} // namespace tct

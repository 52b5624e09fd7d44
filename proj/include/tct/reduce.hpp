#pragma once

#include "tct/auxgraph.hpp"
#include "tct/forest.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tct {

struct RuleCounters {
    std::map<std::string, std::uint64_t> fired;
    void bump(const std::string& rule, std::uint64_t by = 1) { fired[rule] += by; }
    std::uint64_t get(const std::string& rule) const
    {
        auto it = fired.find(rule);
        return it == fired.end() ? 0 : it->second;
    }
    void merge(const RuleCounters& other)
    {
        for (const auto& [k, v] : other.fired) fired[k] += v;
    }
};

enum class ReduceOutcome { changed, fixpoint, infeasible };

// Reduction rules. Each applies every instance of its rule it can find in one
// scan and reports whether anything changed. Rules that cut edges report
// infeasible when the budget runs out.
ReduceOutcome rule_useless_edge(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_unit_request(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_subtree_isolation(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_vc_exclusion(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_even_path_cut(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_cross_covered_contract(WorkingForest& f, RuleCounters& rc);
ReduceOutcome rule_grandparent_request(WorkingForest& f, RuleCounters& rc);

// Loops the rules in the listed order, restarting after any edit, until a
// full pass makes no change.
ReduceOutcome reduce_to_fixpoint(WorkingForest& f, RuleCounters& rc);

// Test oracle: the checkable reduced-instance properties. Returns a list of
// violations (empty iff the forest is reduced).
std::vector<std::string> check_reduced(const WorkingForest& f);

// Live requests from inside T_w to T_{parent(w)} \ T_w.
std::vector<VertexPair> cross_requests(const WorkingForest& f, Vertex w);
// Targets of v's live requests lying in T_p but not in T_w.
std::vector<Vertex> targets_within(const WorkingForest& f, Vertex v, Vertex p, Vertex w);

} // namespace tct

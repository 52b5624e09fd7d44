#pragma once

#include "tct/instance.hpp"

#include <map>
#include <set>
#include <vector>

namespace tct {

enum class EditStatus { ok, budget_exhausted, infeasible_branch };

struct EditRecord {
    enum class Kind { cut, contract, favor };
    Kind kind;
    EdgeId edge = -1;           // cut / contract
    Vertex vertex = -1;         // favor
    std::vector<Vertex> chain;  // favor
    int node_id = 0;
};

// Rooted forest under cut/contract edits. A live vertex stands for the set of
// original vertices merged into it by contractions; each live edge remembers
// the single original tree edge it descends from. Requests are kept as
// normalized pairs of live vertices and purged as soon as a cut separates
// them. The budget is the remaining parameter k.
class WorkingForest {
public:
    WorkingForest(const Instance& inst, long long budget, Vertex preferred_root = -1);

    const Instance& instance() const { return *inst_; }
    int n_original() const { return inst_->n; }

    Vertex find(Vertex original) const;
    bool live(Vertex v) const { return live_[v]; }
    Vertex parent(Vertex v) const { return parent_[v]; }
    bool is_root(Vertex v) const { return live_[v] && parent_[v] < 0; }
    EdgeId parent_edge(Vertex v) const;
    std::vector<Vertex> children(Vertex v) const;
    bool childless(Vertex v) const;
    // internal vertex whose children are all leaves
    bool important(Vertex v) const;

    Vertex component_root(Vertex v) const;
    std::vector<Vertex> component_vertices(Vertex v) const;
    std::vector<Vertex> subtree_vertices(Vertex v) const;
    bool in_subtree(Vertex x, Vertex sub_root) const;
    Vertex lca(Vertex a, Vertex b) const; // -1 if different components
    std::vector<int> depths() const;      // -1 for dead vertices
    std::vector<Vertex> live_vertices() const;
    std::vector<Vertex> roots() const;

    const std::set<VertexPair>& requests() const { return requests_; }
    bool request_between(Vertex a, Vertex b) const
    {
        return requests_.count(norm_pair(a, b)) != 0;
    }
    std::vector<Vertex> request_partners(Vertex v) const;

    long long budget() const { return budget_; }
    const std::vector<EdgeId>& committed_cut() const { return committed_; }
    const std::vector<EditRecord>& log() const { return log_; }

    // Cuts the edge between `child` and its parent, spending one unit of
    // budget, committing the realizing original edge and purging every
    // request the cut separates. The detached side keeps `child` as root.
    EditStatus cut_child(Vertex child, int node_id = 0);
    // Merges `child` into its parent, re-addressing requests. Fails without
    // mutating when a live request joins the two endpoints.
    EditStatus contract_child(Vertex child, int node_id = 0);

    void favor(Vertex v, std::vector<Vertex> chain, int node_id = 0);
    const std::map<Vertex, std::vector<Vertex>>& favored() const { return favored_; }
    void clear_favor(Vertex v) { favored_.erase(v); }

    void check_invariants() const; // throws std::logic_error on violation

private:
    const Instance* inst_;
    std::vector<std::map<Vertex, EdgeId>> adj_;
    std::vector<char> live_;
    std::vector<Vertex> parent_;
    mutable std::vector<Vertex> rep_;
    std::set<VertexPair> requests_;
    long long budget_ = 0;
    std::vector<EdgeId> committed_;
    std::vector<EditRecord> log_;
    std::map<Vertex, std::vector<Vertex>> favored_;

    void root_component(Vertex any, Vertex preferred);
};

// Replays cut/contract records against a fresh forest; favor records are
// re-installed verbatim. Used to check that the log reproduces a forest.
WorkingForest replay_log(const Instance& inst, const std::vector<EditRecord>& log,
                         long long budget);

// true when live structure, requests, budget and committed cuts all agree
// (super-vertex representatives may differ in name, so comparison is done on
// original-vertex partitions).
bool same_forest(const WorkingForest& a, const WorkingForest& b);

} // namespace tct

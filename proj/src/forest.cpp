#include "tct/forest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tct {

WorkingForest::WorkingForest(const Instance& inst, long long budget, Vertex preferred_root)
    : inst_(&inst),
      adj_(inst.n),
      live_(inst.n, 1),
      parent_(inst.n, -1),
      rep_(inst.n),
      budget_(budget)
{
    for (Vertex v = 0; v < inst.n; ++v) rep_[v] = v;
    for (EdgeId e = 0; e < (int)inst.edges.size(); ++e) {
        adj_[inst.edges[e].u][inst.edges[e].v] = e;
        adj_[inst.edges[e].v][inst.edges[e].u] = e;
    }
    for (auto [a, b] : inst.requests) requests_.insert(norm_pair(a, b));
    root_component(0, preferred_root);
}

void WorkingForest::root_component(Vertex any, Vertex preferred)
{
    // Root at an internal vertex when one exists; lowest id breaks ties.
    std::vector<Vertex> comp = component_vertices(any);
    std::sort(comp.begin(), comp.end());
    Vertex root = -1;
    if (preferred >= 0 && preferred < (int)live_.size() && live_[preferred] &&
        adj_[preferred].size() >= 2 &&
        std::find(comp.begin(), comp.end(), preferred) != comp.end())
        root = preferred;
    if (root < 0)
        for (Vertex v : comp)
            if (adj_[v].size() >= 2) {
                root = v;
                break;
            }
    if (root < 0) root = comp.front();

    parent_[root] = -1;
    std::deque<Vertex> bfs{root};
    std::vector<char> seen(live_.size(), 0);
    seen[root] = 1;
    while (!bfs.empty()) {
        Vertex v = bfs.front();
        bfs.pop_front();
        for (auto [nb, e] : adj_[v])
            if (!seen[nb]) {
                seen[nb] = 1;
                parent_[nb] = v;
                bfs.push_back(nb);
            }
    }
}

Vertex WorkingForest::find(Vertex v) const
{
    while (rep_[v] != v) v = rep_[v] = rep_[rep_[v]];
    return v;
}

EdgeId WorkingForest::parent_edge(Vertex v) const
{
    Vertex p = parent_[v];
    return p < 0 ? -1 : adj_[v].at(p);
}

std::vector<Vertex> WorkingForest::children(Vertex v) const
{
    std::vector<Vertex> out;
    for (auto [nb, e] : adj_[v])
        if (nb != parent_[v]) out.push_back(nb);
    return out;
}

bool WorkingForest::childless(Vertex v) const
{
    for (auto [nb, e] : adj_[v])
        if (nb != parent_[v]) return false;
    return true;
}

bool WorkingForest::important(Vertex v) const
{
    bool any = false;
    for (auto [nb, e] : adj_[v]) {
        if (nb == parent_[v]) continue;
        if (!childless(nb)) return false;
        any = true;
    }
    return any;
}

Vertex WorkingForest::component_root(Vertex v) const
{
    while (parent_[v] >= 0) v = parent_[v];
    return v;
}

std::vector<Vertex> WorkingForest::component_vertices(Vertex v) const
{
    std::vector<Vertex> out{v};
    std::vector<char> seen(live_.size(), 0);
    seen[v] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (auto [nb, e] : adj_[out[i]])
            if (!seen[nb]) {
                seen[nb] = 1;
                out.push_back(nb);
            }
    return out;
}

std::vector<Vertex> WorkingForest::subtree_vertices(Vertex v) const
{
    std::vector<Vertex> out{v};
    for (size_t i = 0; i < out.size(); ++i)
        for (auto [nb, e] : adj_[out[i]])
            if (nb != parent_[out[i]]) out.push_back(nb);
    return out;
}

bool WorkingForest::in_subtree(Vertex x, Vertex sub_root) const
{
    for (Vertex v = x; v >= 0; v = parent_[v])
        if (v == sub_root) return true;
    return false;
}

Vertex WorkingForest::lca(Vertex a, Vertex b) const
{
    auto depth_of = [&](Vertex v) {
        int d = 0;
        for (; parent_[v] >= 0; v = parent_[v]) ++d;
        return d;
    };
    int da = depth_of(a), db = depth_of(b);
    while (da > db) a = parent_[a], --da;
    while (db > da) b = parent_[b], --db;
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
        if (a < 0 || b < 0) return -1;
    }
    return a;
}

std::vector<int> WorkingForest::depths() const
{
    std::vector<int> d(live_.size(), -1);
    for (Vertex v = 0; v < (int)live_.size(); ++v) {
        if (!live_[v] || parent_[v] >= 0) continue;
        d[v] = 0;
        std::deque<Vertex> bfs{v};
        while (!bfs.empty()) {
            Vertex x = bfs.front();
            bfs.pop_front();
            for (auto [nb, e] : adj_[x])
                if (nb != parent_[x]) {
                    d[nb] = d[x] + 1;
                    bfs.push_back(nb);
                }
        }
    }
    return d;
}

std::vector<Vertex> WorkingForest::live_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < (int)live_.size(); ++v)
        if (live_[v]) out.push_back(v);
    return out;
}

std::vector<Vertex> WorkingForest::roots() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < (int)live_.size(); ++v)
        if (live_[v] && parent_[v] < 0) out.push_back(v);
    return out;
}

std::vector<Vertex> WorkingForest::request_partners(Vertex v) const
{
    std::vector<Vertex> out;
    for (auto [a, b] : requests_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

EditStatus WorkingForest::cut_child(Vertex child, int node_id)
{
    if (!live_[child] || parent_[child] < 0)
        throw std::logic_error("cut_child: not a live non-root vertex");
    if (budget_ <= 0) return EditStatus::budget_exhausted;

    Vertex p = parent_[child];
    EdgeId orig = adj_[child].at(p);
    adj_[child].erase(p);
    adj_[p].erase(child);
    parent_[child] = -1;
    --budget_;
    committed_.push_back(orig);
    log_.push_back({EditRecord::Kind::cut, orig, -1, {}, node_id});

    // purge every request the cut separates
    std::vector<Vertex> side = component_vertices(child);
    std::vector<char> in_side(live_.size(), 0);
    for (Vertex v : side) in_side[v] = 1;
    for (auto it = requests_.begin(); it != requests_.end();) {
        if (in_side[it->first] != in_side[it->second])
            it = requests_.erase(it);
        else
            ++it;
    }
    return EditStatus::ok;
}

EditStatus WorkingForest::contract_child(Vertex child, int node_id)
{
    if (!live_[child] || parent_[child] < 0)
        throw std::logic_error("contract_child: not a live non-root vertex");
    Vertex p = parent_[child];
    if (requests_.count(norm_pair(child, p)))
        return EditStatus::infeasible_branch; // a kept edge cannot satisfy a unit request

    EdgeId orig = adj_[child].at(p);
    log_.push_back({EditRecord::Kind::contract, orig, -1, {}, node_id});

    std::vector<std::pair<Vertex, EdgeId>> moved(adj_[child].begin(), adj_[child].end());
    for (auto [nb, e] : moved) {
        if (nb == p) continue;
        adj_[nb].erase(child);
        adj_[nb][p] = e;
        adj_[p][nb] = e;
        if (parent_[nb] == child) parent_[nb] = p;
    }
    adj_[child].clear();
    adj_[p].erase(child);
    live_[child] = 0;
    parent_[child] = -1;
    rep_[child] = p; // union into the surviving parent-side vertex
    favored_.erase(child);

    std::vector<VertexPair> readdressed;
    for (auto it = requests_.begin(); it != requests_.end();) {
        if (it->first == child || it->second == child) {
            Vertex other = it->first == child ? it->second : it->first;
            readdressed.push_back(norm_pair(p, other));
            it = requests_.erase(it);
        } else {
            ++it;
        }
    }
    requests_.insert(readdressed.begin(), readdressed.end());
    return EditStatus::ok;
}

void WorkingForest::favor(Vertex v, std::vector<Vertex> chain, int node_id)
{
    log_.push_back({EditRecord::Kind::favor, -1, v, chain, node_id});
    favored_[v] = std::move(chain);
}

void WorkingForest::check_invariants() const
{
    for (Vertex v = 0; v < (int)live_.size(); ++v) {
        if (!live_[v]) {
            if (!adj_[v].empty()) throw std::logic_error("dead vertex with adjacency");
            continue;
        }
        for (auto [nb, e] : adj_[v]) {
            if (!live_[nb]) throw std::logic_error("edge to dead vertex");
            if (adj_[nb].at(v) != e) throw std::logic_error("asymmetric adjacency");
        }
        if (parent_[v] >= 0 && !adj_[v].count(parent_[v]))
            throw std::logic_error("parent not adjacent");
    }
    for (auto [a, b] : requests_) {
        if (!live_[a] || !live_[b]) throw std::logic_error("request on dead vertex");
        if (component_root(a) != component_root(b))
            throw std::logic_error("request spans components");
    }
    std::set<EdgeId> seen(committed_.begin(), committed_.end());
    if (seen.size() != committed_.size())
        throw std::logic_error("duplicate committed cut edge");
}

WorkingForest replay_log(const Instance& inst, const std::vector<EditRecord>& log,
                         long long budget)
{
    WorkingForest f(inst, budget);
    for (const EditRecord& r : log) {
        switch (r.kind) {
        case EditRecord::Kind::favor:
            f.favor(r.vertex, r.chain, r.node_id);
            break;
        case EditRecord::Kind::cut:
        case EditRecord::Kind::contract: {
            Vertex a = f.find(inst.edges[r.edge].u);
            Vertex b = f.find(inst.edges[r.edge].v);
            Vertex child = f.parent(a) == b ? a : b;
            if (f.parent(child) != (child == a ? b : a))
                throw std::logic_error("replay: edge endpoints not adjacent");
            EditStatus st = r.kind == EditRecord::Kind::cut ? f.cut_child(child, r.node_id)
                                                            : f.contract_child(child, r.node_id);
            if (st != EditStatus::ok) throw std::logic_error("replay: edit failed");
            break;
        }
        }
    }
    return f;
}

bool same_forest(const WorkingForest& a, const WorkingForest& b)
{
    const Instance& inst = a.instance();
    if (&inst != &b.instance()) return false;
    if (a.budget() != b.budget()) return false;
    if (a.committed_cut() != b.committed_cut()) return false;
    // compare super-vertex partitions and live edge sets via canonical reps
    // (canonical name = smallest original vertex merged into the live vertex)
    std::map<Vertex, Vertex> canon_a, canon_b;
    for (Vertex v = 0; v < inst.n; ++v) {
        Vertex ra = a.find(v), rb = b.find(v);
        if (!canon_a.count(ra)) canon_a[ra] = v;
        if (!canon_b.count(rb)) canon_b[rb] = v;
        if (canon_a[ra] != canon_b[rb]) return false;
    }
    auto edges_of = [&](const WorkingForest& f, std::map<Vertex, Vertex>& canon) {
        std::set<VertexPair> out;
        for (Vertex v : f.live_vertices())
            if (f.parent(v) >= 0) out.insert(norm_pair(canon[v], canon[f.parent(v)]));
        return out;
    };
    if (edges_of(a, canon_a) != edges_of(b, canon_b)) return false;
    auto reqs_of = [&](const WorkingForest& f, std::map<Vertex, Vertex>& canon) {
        std::set<VertexPair> out;
        for (auto [x, y] : f.requests()) out.insert(norm_pair(canon[x], canon[y]));
        return out;
    };
    return reqs_of(a, canon_a) == reqs_of(b, canon_b);
}

} // namespace tct

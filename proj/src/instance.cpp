#include "tct/instance.hpp"

#include <algorithm>
#include <numeric>

namespace tct {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

Instance build_instance(int n, std::vector<Edge> edges,
                        std::vector<VertexPair> requests, std::optional<int> k)
{
    if (n < 1)
        throw BuildError(BuildErrorKind::not_a_tree, "need at least one vertex");
    if ((int)edges.size() != n - 1)
        throw BuildError(BuildErrorKind::not_a_tree,
                         "a tree on " + std::to_string(n) + " vertices needs " +
                             std::to_string(n - 1) + " edges, got " +
                             std::to_string(edges.size()));
    Dsu dsu(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw BuildError(BuildErrorKind::bad_vertex_id, "edge endpoint out of range");
        if (e.u == e.v || !dsu.unite(e.u, e.v))
            throw BuildError(BuildErrorKind::not_a_tree, "edge list contains a cycle");
    }
    // n-1 successful unions on n vertices imply connectivity.
    std::vector<VertexPair> reqs;
    reqs.reserve(requests.size());
    for (auto [a, b] : requests) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw BuildError(BuildErrorKind::bad_vertex_id, "request endpoint out of range");
        if (a == b)
            throw BuildError(BuildErrorKind::self_request,
                             "request (" + std::to_string(a) + "," + std::to_string(a) + ")");
        reqs.push_back(norm_pair(a, b));
    }
    std::sort(reqs.begin(), reqs.end());
    reqs.erase(std::unique(reqs.begin(), reqs.end()), reqs.end());

    Instance inst;
    inst.mode = Mode::mct;
    inst.n = n;
    inst.edges = std::move(edges);
    inst.requests = std::move(reqs);
    inst.k = k;
    return inst;
}

bool verify_cut(const Instance& inst, const std::vector<EdgeId>& cut)
{
    std::vector<char> removed(inst.edges.size(), 0);
    for (EdgeId e : cut) {
        if (e < 0 || e >= (int)inst.edges.size()) return false;
        removed[e] = 1;
    }
    Dsu dsu(inst.n);
    for (EdgeId e = 0; e < (int)inst.edges.size(); ++e)
        if (!removed[e]) dsu.unite(inst.edges[e].u, inst.edges[e].v);
    for (auto [a, b] : inst.requests)
        if (dsu.find(a) == dsu.find(b)) return false;
    return true;
}

std::uint64_t cut_cost(const Instance& inst, const std::vector<EdgeId>& cut)
{
    std::uint64_t total = 0;
    for (EdgeId e : cut) total += inst.edges[e].cost;
    return total;
}

} // namespace tct

#include "tct/oracle.hpp"

#include "tct/gmwct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

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
    void unite(int a, int b) { p[find(a)] = find(b); }
};

bool subset_cuts(const Instance& inst, const std::vector<EdgeId>& cut)
{
    Dsu dsu(inst.n);
    std::vector<char> removed(inst.edges.size(), 0);
    for (EdgeId e : cut) removed[e] = 1;
    for (EdgeId e = 0; e < (int)inst.edges.size(); ++e)
        if (!removed[e]) dsu.unite(inst.edges[e].u, inst.edges[e].v);
    for (auto [a, b] : inst.requests)
        if (dsu.find(a) == dsu.find(b)) return false;
    return true;
}

} // namespace

OracleCut brute_force_min_cut(const Instance& inst)
{
    int m = (int)inst.edges.size();
    if (m > 20) throw TooLarge("brute force limited to 20 edges");
    if (inst.requests.empty()) return {};

    bool weighted = inst.mode == Mode::wgmwct;
    if (!weighted) {
        // subsets by size, lexicographic within a size
        for (int s = 1; s <= m; ++s) {
            std::vector<EdgeId> pick(s);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                if (subset_cuts(inst, pick)) return {(std::uint64_t)s, pick};
                int i = s - 1;
                while (i >= 0 && pick[i] == m - s + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        throw std::logic_error("no cut by full enumeration");
    }
    std::uint64_t best = ~0ull;
    std::vector<EdgeId> best_cut;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<EdgeId> cut;
        std::uint64_t cost = 0;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) {
                cut.push_back(e);
                cost += inst.edges[e].cost;
            }
        if (cost > best) continue;
        if (!subset_cuts(inst, cut)) continue;
        if (cost < best || (cost == best && cut < best_cut)) {
            best = cost;
            best_cut = cut;
        }
    }
    return {best, best_cut};
}

int brute_force_vc(const std::vector<std::vector<int>>& adj)
{
    int n = (int)adj.size();
    if (n > 20) throw TooLarge("brute force limited to 20 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) edges.push_back({v, w});
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool ok = true;
        for (auto [a, b] : edges)
            if (!((mask >> a) & 1u) && !((mask >> b) & 1u)) {
                ok = false;
                break;
            }
        if (ok) best = size;
    }
    return best;
}

namespace {

struct Builder {
    std::vector<Edge> edges;
    std::vector<VertexPair> reqs;
    int n = 0;
    void edge(Vertex a, Vertex b)
    {
        edges.push_back({a, b, 1});
        n = std::max({n, a + 1, b + 1});
    }
    void req(Vertex a, Vertex b) { reqs.push_back(norm_pair(a, b)); }
    Instance done() const { return build_instance(n, edges, reqs); }
};

Instance gadget_instance(const std::string& name)
{
    Builder b;
    if (name == "rr-useless") {
        b.edge(0, 1); b.edge(1, 2);
        b.req(0, 1);
    } else if (name == "rr-unit") {
        b.edge(0, 1); b.edge(1, 2);
        b.req(0, 1);
    } else if (name == "rr-subtree" || name == "it-detached") {
        // one frontier subtree whose requests never reach its siblings
        b.edge(0, 1); b.edge(1, 2); b.edge(2, 3); b.edge(2, 4); b.edge(0, 5);
        b.req(3, 4); b.req(3, 5);
    } else if (name == "rr-vc-exclusion") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(0, 5);
        b.req(2, 3); b.req(4, 5);
    } else if (name == "rr-even-path") {
        b.edge(0, 1); b.edge(0, 2); b.edge(0, 3);
        b.req(1, 2); b.req(2, 3);
    } else if (name == "rr-cross-covered") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4);
        b.req(2, 3); b.req(2, 4);
    } else if (name == "rr-grandparent") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4);
        b.req(2, 3); b.req(2, 0); b.req(3, 4);
    } else if (name == "deg3") {
        b.edge(0, 1); b.edge(0, 2); b.edge(0, 3); b.edge(0, 4);
        b.req(1, 2); b.req(1, 3); b.req(1, 4);
    } else if (name == "long-odd-path") {
        for (Vertex v = 1; v <= 6; ++v) b.edge(0, v);
        b.req(1, 2); b.req(2, 3); b.req(3, 4); b.req(4, 5); b.req(5, 6);
    } else if (name == "nonleaf-sibling") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 4); b.edge(2, 5);
        b.edge(2, 6);
        b.req(3, 4); b.req(5, 6); b.req(1, 2);
    } else if (name == "deg2-cross") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(0, 5);
        b.edge(0, 6); b.edge(0, 7);
        b.req(2, 3); b.req(3, 4); b.req(2, 4); // triangle in G_1
        b.req(2, 5); b.req(3, 6); b.req(4, 7);
    } else if (name == "path3-cross") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7);
        b.req(2, 3); b.req(3, 4); b.req(4, 5); // length-3 path in G_1
        b.req(1, 6); b.req(2, 7);
    } else if (name == "nonleaf-uncle") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 4); b.edge(2, 5);
        b.edge(2, 6); b.edge(0, 7);
        b.req(3, 4); b.req(5, 6); b.req(3, 2); b.req(4, 7);
    } else if (name == "multi-cross-split") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4); b.edge(0, 5);
        b.edge(0, 6);
        b.req(2, 3); b.req(2, 4); b.req(2, 5); b.req(3, 6);
    } else if (name == "multi-cross-shared") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 4); b.edge(0, 9);
        b.edge(2, 5); b.edge(2, 6); b.edge(2, 7); b.edge(2, 8); b.edge(0, 10);
        b.req(3, 4); b.req(4, 9); b.req(3, 5); b.req(3, 6); b.req(5, 7);
        b.req(6, 8); b.req(7, 10);
    } else if (name == "leaf-sibling-bigcover") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6);
        b.req(2, 3); b.req(4, 5); b.req(1, 6);
    } else if (name == "leaf-sibling-extra") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4); b.edge(0, 5);
        b.req(2, 3); b.req(1, 4); b.req(1, 5);
    } else if (name == "leaf-sibling-partner") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4); b.edge(0, 5);
        b.req(2, 3); b.req(1, 4); b.req(4, 5);
    } else if (name == "busy-leaf") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4); b.edge(0, 5);
        b.edge(0, 6); b.edge(0, 7); b.edge(0, 8); b.edge(0, 9);
        b.req(2, 3); b.req(2, 8); b.req(3, 9);
        b.req(4, 5); b.req(4, 6); b.req(4, 7);
    } else if (name == "busy-leaf-nephews") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(0, 4); b.edge(0, 5);
        b.req(2, 3); b.req(4, 2); b.req(4, 3); b.req(4, 5);
    } else if (name == "two-edges-same-uncle") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7); b.edge(0, 8);
        b.req(2, 3); b.req(4, 5);
        b.req(2, 6); b.req(3, 6); b.req(4, 7); b.req(5, 8);
    } else if (name == "two-edges-paired-uncles") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7);
        b.req(2, 3); b.req(4, 5);
        b.req(2, 6); b.req(4, 6); b.req(3, 7); b.req(5, 7);
    } else if (name == "two-edges-shared-uncle") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7); b.edge(0, 8);
        b.req(2, 3); b.req(4, 5);
        b.req(2, 6); b.req(4, 6); b.req(3, 7); b.req(5, 8);
    } else if (name == "two-edges-distinct") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7); b.edge(0, 8); b.edge(0, 9);
        b.req(2, 3); b.req(4, 5);
        b.req(2, 6); b.req(3, 7); b.req(4, 8); b.req(5, 9);
    } else if (name == "special-quadruple" || name == "gp6") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 4);
        b.req(3, 4); b.req(3, 2); b.req(4, 2); b.req(1, 2);
    } else if (name == "gstar-even-path") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 5);
        b.edge(0, 6); b.edge(0, 7); b.edge(0, 8);
        b.req(2, 3); b.req(2, 6); b.req(4, 5); b.req(4, 7); b.req(5, 8);
    } else if (name == "gstar-odd-path") {
        b.edge(0, 1); b.edge(0, 2); b.edge(0, 3); b.edge(0, 4);
        b.edge(1, 5); b.edge(1, 6); b.edge(2, 7); b.edge(2, 8);
        b.req(3, 5); b.req(5, 6); b.req(6, 7); b.req(7, 8); b.req(8, 4);
    } else if (name == "gstar-even-cycle" || name == "it-gp2") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 4); b.edge(2, 5);
        b.edge(2, 6);
        b.req(3, 4); b.req(5, 6); b.req(4, 5); b.req(6, 3);
    } else if (name == "gstar-odd-cycle") {
        b.edge(0, 1); b.edge(0, 2); b.edge(0, 3); b.edge(0, 4);
        b.edge(1, 5); b.edge(1, 6); b.edge(2, 7); b.edge(2, 8);
        b.edge(3, 9); b.edge(3, 10);
        b.req(4, 5); b.req(5, 6); b.req(6, 7); b.req(7, 8); b.req(8, 9);
        b.req(9, 10); b.req(10, 4);
    } else if (name == "it-important") {
        b.edge(0, 1); b.edge(0, 2); b.edge(1, 3); b.edge(1, 8); b.edge(1, 9);
        b.edge(3, 4); b.edge(3, 5); b.edge(2, 6); b.edge(6, 7); b.edge(6, 10);
        b.req(4, 5); b.req(4, 8); b.req(5, 9); b.req(3, 7); b.req(7, 10);
    } else if (name == "it-deg2") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 5); b.edge(2, 3); b.edge(2, 4);
        b.edge(0, 7); b.edge(7, 6); b.edge(7, 8);
        b.req(3, 4); b.req(3, 5); b.req(4, 5); b.req(3, 6); b.req(6, 8);
    } else if (name == "it-path-end") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 5); b.edge(1, 6); b.edge(2, 3);
        b.edge(2, 4); b.edge(0, 7); b.edge(7, 8); b.edge(8, 9); b.edge(8, 10);
        b.req(3, 4); b.req(3, 5); b.req(4, 6); b.req(5, 9); b.req(9, 10);
    } else if (name == "it-gp1") {
        b.edge(0, 1); b.edge(1, 2); b.edge(2, 3); b.edge(2, 4); b.edge(2, 5);
        b.edge(2, 6); b.edge(1, 7); b.edge(1, 8);
        b.edge(0, 9); b.edge(9, 10); b.edge(10, 11); b.edge(10, 12);
        b.req(3, 4); b.req(5, 6); b.req(5, 7); b.req(6, 8);
        b.req(3, 11); b.req(11, 12);
    } else if (name == "gp1" || name == "gp3") {
        b.edge(0, 1); b.edge(1, 2); b.edge(2, 3); b.edge(2, 4); b.edge(2, 5);
        b.edge(2, 6); b.edge(1, 7); b.edge(1, 8);
        b.req(3, 4); b.req(5, 6); b.req(5, 7); b.req(6, 8);
    } else if (name == "gp2") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 3); b.edge(1, 4); b.edge(1, 7);
        b.edge(1, 8); b.edge(2, 5); b.edge(2, 6);
        b.req(3, 4); b.req(5, 6); b.req(5, 7); b.req(6, 8);
    } else if (name == "gp4") {
        b.edge(0, 1); b.edge(1, 2); b.edge(2, 3); b.edge(2, 4); b.edge(1, 5);
        b.edge(2, 6); b.edge(2, 7); b.edge(2, 8);
        b.edge(0, 9); b.edge(9, 10); b.edge(10, 11); b.edge(10, 12);
        b.req(3, 4); b.req(3, 5); b.req(4, 5);
        b.req(6, 7); b.req(7, 8); b.req(6, 8);
        b.req(2, 11); b.req(11, 12);
    } else if (name == "gp5") {
        b.edge(0, 1); b.edge(1, 2); b.edge(1, 8); b.edge(2, 3); b.edge(2, 4);
        b.edge(8, 5); b.edge(8, 6); b.edge(1, 7);
        b.req(3, 4); b.req(4, 5); b.req(5, 6); b.req(6, 7); b.req(3, 7);
    } else if (name == "gp7" || name == "closed-cluster") {
        b.edge(0, 1); b.edge(1, 2); b.edge(2, 3); b.edge(2, 4); b.edge(2, 5);
        b.edge(2, 6); b.edge(2, 7); b.edge(1, 8); b.edge(1, 9);
        b.req(3, 4); b.req(4, 5); b.req(3, 5); // triangle inside G_2
        b.req(6, 7); b.req(6, 8); b.req(7, 9);
    } else if (name == "star-cover") {
        b.edge(0, 1); b.edge(0, 2); b.edge(0, 3); b.edge(0, 4);
        b.req(1, 2); b.req(3, 4);
    } else {
        throw BadSpec("unknown gadget: " + name);
    }
    return b.done();
}

const std::vector<std::string> kGadgets = {
    "rr-useless", "rr-unit", "rr-subtree", "rr-vc-exclusion", "rr-even-path",
    "rr-cross-covered", "rr-grandparent", "deg3", "long-odd-path",
    "nonleaf-sibling", "deg2-cross", "path3-cross", "nonleaf-uncle",
    "multi-cross-split", "multi-cross-shared", "leaf-sibling-bigcover",
    "leaf-sibling-extra", "leaf-sibling-partner", "busy-leaf",
    "busy-leaf-nephews", "two-edges-same-uncle", "two-edges-paired-uncles",
    "two-edges-shared-uncle", "two-edges-distinct", "special-quadruple",
    "gstar-even-path", "gstar-odd-path", "gstar-even-cycle", "gstar-odd-cycle",
    "it-detached", "it-important", "it-deg2", "it-path-end", "it-gp1", "it-gp2",
    "gp1", "gp2", "gp3", "gp4", "gp5", "gp6", "gp7", "closed-cluster",
    "star-cover",
};

} // namespace

const std::vector<std::string>& gadget_names() { return kGadgets; }

Instance generate(const GenSpec& spec)
{
    if (spec.mode == "gadget") return gadget_instance(spec.gadget);
    if (spec.edges < 1) throw BadSpec("need at least one edge");
    std::mt19937_64 rng(spec.seed);
    int n = spec.edges + 1;
    std::vector<Edge> edges;

    if (spec.mode == "random-tree") {
        // random Pruefer sequence
        if (n == 2) {
            edges.push_back({0, 1, 1});
        } else {
            std::vector<int> pruefer(n - 2);
            for (int& x : pruefer) x = (int)(rng() % n);
            std::vector<int> deg(n, 1);
            for (int x : pruefer) ++deg[x];
            std::set<int> leaves;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) leaves.insert(v);
            for (int x : pruefer) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.push_back({leaf, x, 1});
                if (--deg[x] == 1) leaves.insert(x);
            }
            int a = *leaves.begin(), c = *leaves.rbegin();
            edges.push_back({a, c, 1});
        }
    } else if (spec.mode == "star") {
        for (int v = 1; v < n; ++v) edges.push_back({0, v, 1});
    } else if (spec.mode == "caterpillar") {
        int spine = std::max(2, n / 2);
        for (int v = 1; v < spine; ++v) edges.push_back({v - 1, v, 1});
        for (int v = spine; v < n; ++v)
            edges.push_back({(int)(rng() % spine), v, 1});
    } else {
        throw BadSpec("unknown generator mode: " + spec.mode);
    }

    if (spec.weighted)
        for (Edge& e : edges) e.cost = rng() % (spec.max_cost + 1);

    if (spec.q > 0) {
        std::vector<std::vector<Vertex>> sets;
        for (int i = 0; i < spec.q; ++i) {
            int size = 2 + (int)(rng() % 3);
            std::set<Vertex> s;
            while ((int)s.size() < std::min(size, n)) s.insert((int)(rng() % n));
            sets.emplace_back(s.begin(), s.end());
        }
        return build_instance_terminal_sets(n, std::move(edges), std::move(sets),
                                            std::nullopt, spec.weighted);
    }

    std::set<VertexPair> reqs;
    int want = std::min(spec.requests, n * (n - 1) / 2);
    while ((int)reqs.size() < want) {
        Vertex a = (int)(rng() % n), c = (int)(rng() % n);
        if (a != c) reqs.insert(norm_pair(a, c));
    }
    return build_instance(n, std::move(edges),
                          std::vector<VertexPair>(reqs.begin(), reqs.end()));
}

} // namespace tct

#include "tct/gmwct.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace tct {

std::vector<VertexPair> expand_to_requests(const std::vector<std::vector<Vertex>>& sets)
{
    std::vector<VertexPair> out;
    for (const auto& s : sets)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (s[i] != s[j]) out.push_back(norm_pair(s[i], s[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Instance build_instance_terminal_sets(int n, std::vector<Edge> edges,
                                      std::vector<std::vector<Vertex>> sets,
                                      std::optional<int> k, bool weighted)
{
    for (const auto& s : sets)
        for (Vertex v : s)
            if (v < 0 || v >= n)
                throw BuildError(BuildErrorKind::bad_vertex_id,
                                 "terminal out of range");
    std::vector<std::vector<Vertex>> cleaned;
    for (auto s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        cleaned.push_back(std::move(s));
    }
    Instance inst = build_instance(n, std::move(edges), expand_to_requests(cleaned), k);
    inst.mode = weighted ? Mode::wgmwct : Mode::gmwct;
    inst.terminal_sets = std::move(cleaned);
    if (!weighted)
        for (Edge& e : inst.edges) e.cost = 1;
    return inst;
}

PreprocessedTree preprocess(const Instance& inst)
{
    int q = (int)inst.terminal_sets.size();
    if (q < 1) throw GmwctError("no terminal sets");
    if (q > kMaxTerminalSets)
        throw GmwctError("more than " + std::to_string(kMaxTerminalSets) +
                         " terminal sets");

    // CSR adjacency: two counting passes, no per-vertex allocations
    int n0 = inst.n;
    std::vector<int> off(n0 + 2, 0);
    for (const Edge& e : inst.edges) {
        ++off[e.u + 1];
        ++off[e.v + 1];
    }
    for (int v = 0; v < n0 + 1; ++v) off[v + 1] += off[v];
    struct Arc {
        Vertex to;
        std::uint64_t cost;
        EdgeId orig;
    };
    std::vector<Arc> arcs(2 * inst.edges.size());
    {
        std::vector<int> fill(off.begin(), off.end() - 1);
        for (EdgeId e = 0; e < (int)inst.edges.size(); ++e) {
            const Edge& ed = inst.edges[e];
            arcs[fill[ed.u]++] = {ed.v, ed.cost, e};
            arcs[fill[ed.v]++] = {ed.u, ed.cost, e};
        }
    }
    std::uint64_t sentinel = 1;
    for (const Edge& e : inst.edges) sentinel += e.cost;

    std::vector<std::uint32_t> mask(n0, 0);
    for (int i = 0; i < q; ++i)
        for (Vertex v : inst.terminal_sets[i]) mask[v] |= 1u << i;

    std::vector<char> dead(n0, 0);
    std::vector<int> deg(n0);
    for (Vertex v = 0; v < n0; ++v) deg[v] = off[v + 1] - off[v];

    // drop non-terminal leaves until every leaf is a terminal; an internal
    // terminal pins its vertex, the pendant it owes is added after compaction
    {
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < n0; ++v)
            if (deg[v] <= 1 && mask[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            if (dead[v] || deg[v] > 1 || mask[v] != 0) continue;
            dead[v] = 1;
            deg[v] = 0;
            for (int i = off[v]; i < off[v + 1]; ++i) {
                Vertex nb = arcs[i].to;
                if (!dead[nb] && --deg[nb] <= 1 && mask[nb] == 0) queue.push_back(nb);
            }
        }
    }
    {
        int terms = 0;
        for (Vertex v = 0; v < n0; ++v)
            if (!dead[v] && mask[v] != 0) ++terms;
        if (terms <= 1) { // nothing or a single terminal: no cut needed
            PreprocessedTree t;
            t.q = q;
            t.trivial = true;
            return t;
        }
    }

    // root the surviving tree at an internal vertex when one exists
    Vertex root0 = -1;
    for (Vertex v = 0; v < n0 && root0 < 0; ++v)
        if (!dead[v] && deg[v] >= 2) root0 = v;
    if (root0 < 0)
        for (Vertex v = 0; v < n0 && root0 < 0; ++v)
            if (!dead[v] && deg[v] > 0) root0 = v;

    // compact to live vertices while walking the tree
    PreprocessedTree t;
    t.q = q;
    t.sentinel = sentinel;
    std::vector<Vertex> live_of; // new id -> old id
    std::vector<Vertex> stack{root0};
    std::vector<Vertex> parent_new;
    std::vector<std::uint64_t> up_cost;
    std::vector<EdgeId> up_orig;
    std::vector<std::uint32_t> mask_new;
    std::vector<char> seen(n0, 0);
    seen[root0] = 1;
    std::vector<int> new_id(n0, -1);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        int id = (int)live_of.size();
        new_id[v] = id;
        live_of.push_back(v);
        parent_new.push_back(-1); // fixed below via arcs
        up_cost.push_back(0);
        up_orig.push_back(-1);
        mask_new.push_back(mask[v]);
        for (int i = off[v]; i < off[v + 1]; ++i) {
            Vertex nb = arcs[i].to;
            if (dead[nb] || seen[nb]) continue;
            seen[nb] = 1;
            stack.push_back(nb);
        }
    }
    // pin parents, costs and original edge ids with a traversal in new ids
    {
        std::vector<char> seen2(live_of.size(), 0);
        std::vector<int> st{new_id[root0]};
        seen2[new_id[root0]] = 1;
        while (!st.empty()) {
            int id = st.back();
            st.pop_back();
            Vertex v = live_of[id];
            for (int i = off[v]; i < off[v + 1]; ++i) {
                Vertex nb = arcs[i].to;
                if (dead[nb]) continue;
                int nid = new_id[nb];
                if (seen2[nid]) continue;
                seen2[nid] = 1;
                parent_new[nid] = id;
                up_cost[nid] = arcs[i].cost;
                up_orig[nid] = arcs[i].orig;
                st.push_back(nid);
            }
        }
    }

    auto add_vertex = [&](int par, std::uint64_t c, EdgeId orig, std::uint32_t m) {
        parent_new.push_back(par);
        up_cost.push_back(c);
        up_orig.push_back(orig);
        mask_new.push_back(m);
        return (int)parent_new.size() - 1;
    };
    std::vector<std::vector<int>> kids(parent_new.size());
    for (int id = 0; id < (int)parent_new.size(); ++id)
        if (parent_new[id] >= 0) kids[parent_new[id]].push_back(id);

    // internal terminals (and a terminal root) move their identity to a
    // pendant synthetic leaf
    int live_n = (int)parent_new.size();
    for (int id = 0; id < live_n; ++id) {
        bool has_kids = !kids[id].empty();
        bool is_root = parent_new[id] < 0;
        if (mask_new[id] != 0 && (has_kids || is_root)) {
            int w = add_vertex(id, t.sentinel, -1, mask_new[id]);
            mask_new[id] = 0;
            kids.push_back({});
            kids[id].push_back(w);
        }
    }
    // binarize wide vertices with sentinel chains
    for (size_t vi = 0; vi < kids.size(); ++vi) {
        int v = (int)vi;
        while (kids[v].size() > 2) {
            std::vector<int> cs = kids[v];
            int link = add_vertex(v, t.sentinel, -1, 0);
            kids.push_back({});
            for (size_t i = 1; i < cs.size(); ++i) {
                parent_new[cs[i]] = link;
                kids[link].push_back(cs[i]);
            }
            kids[v] = {cs[0], link};
            v = link;
        }
    }

    t.n = (int)parent_new.size();
    t.root = new_id[root0];
    t.parent = std::move(parent_new);
    t.children.assign(t.n, {});
    for (int id = 0; id < t.n; ++id)
        if (t.parent[id] >= 0) t.children[t.parent[id]].push_back(id);
    for (auto& c : t.children) std::sort(c.begin(), c.end());
    t.up_cost = std::move(up_cost);
    t.up_original = std::move(up_orig);
    t.term_mask = std::move(mask_new);
    return t;
}

DpRow dp_leaf(std::uint32_t term_mask, int q)
{
    DpRow row(size_t(1) << q, kDpInf);
    row[term_mask] = 0;
    return row;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
    if (a == kDpInf || b == kDpInf) return kDpInf;
    return a + b;
}

std::uint64_t row_min(const DpRow& r)
{
    std::uint64_t m = kDpInf;
    for (std::uint64_t v : r) m = std::min(m, v);
    return m;
}

} // namespace

DpRow dp_one_child(const DpRow& child, std::uint64_t edge_cost)
{
    DpRow row = child; // keep the edge: the pattern passes through
    std::uint64_t cutv = sat_add(edge_cost, row_min(child));
    row[0] = std::min(row[0], cutv);
    return row;
}

DpRow dp_two_children(const DpRow& left, const DpRow& right, std::uint64_t cost_left,
                      std::uint64_t cost_right)
{
    size_t width = left.size();
    DpRow row(width, kDpInf);
    std::uint64_t lmin = row_min(left), rmin = row_min(right);
    // remove both edges
    row[0] = sat_add(sat_add(cost_left, cost_right), sat_add(lmin, rmin));
    // remove one edge, pass the other child through
    for (size_t b = 0; b < width; ++b) {
        row[b] = std::min(row[b], sat_add(sat_add(cost_left, lmin), right[b]));
        row[b] = std::min(row[b], sat_add(sat_add(cost_right, rmin), left[b]));
    }
    // keep both: children may not share a one at any position, so the union
    // runs over disjoint pattern pairs (3^q combinations via submasks)
    for (size_t b = 0; b < width; ++b) {
        size_t sub = b;
        while (true) {
            std::uint64_t v = sat_add(left[sub], right[b ^ sub]);
            if (v < row[b]) row[b] = v;
            if (sub == 0) break;
            sub = (sub - 1) & b;
        }
    }
    return row;
}

WgmwctResult solve_wgmwct(const Instance& inst)
{
    PreprocessedTree t = preprocess(inst);
    WgmwctResult res;
    if (t.trivial) return res;

    size_t width = size_t(1) << t.q;
    if (width * (size_t)(t.n + 1) > (size_t(1) << 27))
        throw GmwctError("pattern table too large for this instance");

    // iterative post-order
    std::vector<Vertex> order;
    order.reserve(t.n);
    {
        std::vector<Vertex> stack{t.root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (Vertex c : t.children[v]) stack.push_back(c);
        }
        std::reverse(order.begin(), order.end());
    }

    // one flat buffer for every row keeps the hot loop allocation-free;
    // rows live at the vertex's post-order position so the combination step
    // reads recently written memory
    std::vector<std::size_t> pos(t.n, 0);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> table(width * order.size(), kDpInf);
    auto row = [&](Vertex v) { return table.data() + width * pos[v]; };
    std::vector<std::uint32_t> min_arg(t.n, 0);
    std::vector<std::uint64_t> min_val(t.n, kDpInf);
    for (Vertex v : order) {
        const auto& ch = t.children[v];
        std::uint64_t* out = row(v);
        if (ch.empty()) {
            out[t.term_mask[v]] = 0;
        } else if (ch.size() == 1) {
            Vertex c = ch[0];
            const std::uint64_t* cr = row(c);
            for (size_t b = 0; b < width; ++b) out[b] = cr[b];
            std::uint64_t cutv = sat_add(t.up_cost[c], min_val[c]);
            out[0] = std::min(out[0], cutv);
        } else {
            Vertex cl = ch[0], cr2 = ch[1];
            const std::uint64_t* lr = row(cl);
            const std::uint64_t* rr = row(cr2);
            std::uint64_t lcut = sat_add(t.up_cost[cl], min_val[cl]);
            std::uint64_t rcut = sat_add(t.up_cost[cr2], min_val[cr2]);
            out[0] = sat_add(lcut, rcut); // both edges removed
            for (size_t b = 0; b < width; ++b) {
                std::uint64_t best = out[b];
                best = std::min(best, sat_add(lcut, rr[b]));
                best = std::min(best, sat_add(rcut, lr[b]));
                // keep both: kept patterns may not overlap
                for (size_t sub = b;; sub = (sub - 1) & b) {
                    std::uint64_t val = sat_add(lr[sub], rr[b ^ sub]);
                    if (val < best) best = val;
                    if (sub == 0) break;
                }
                out[b] = best;
            }
        }
        std::uint64_t m = kDpInf;
        std::uint32_t arg = 0;
        for (size_t b = 0; b < width; ++b)
            if (out[b] < m) {
                m = out[b];
                arg = (std::uint32_t)b;
            }
        min_val[v] = m;
        min_arg[v] = arg;
    }

    std::uint64_t opt = min_val[t.root];
    if (opt == kDpInf) throw std::logic_error("pattern table has no finite entry");

    // recover the removed edges top-down; fewer cuts win ties, then the
    // lexicographically smaller edge choice
    std::vector<EdgeId> cut;
    auto take_edge = [&](Vertex child) {
        if (t.up_original[child] < 0)
            throw std::logic_error("optimal cut pays for a synthetic edge");
        cut.push_back(t.up_original[child]);
    };
    std::vector<std::pair<Vertex, std::uint32_t>> stack{{t.root, min_arg[t.root]}};
    while (!stack.empty()) {
        auto [v, b] = stack.back();
        stack.pop_back();
        const auto& ch = t.children[v];
        if (ch.empty()) continue;
        std::uint64_t want = row(v)[b];
        if (ch.size() == 1) {
            Vertex c = ch[0];
            if (row(c)[b] == want) {
                stack.push_back({c, b});
            } else {
                take_edge(c);
                stack.push_back({c, min_arg[c]});
            }
            continue;
        }
        Vertex cl = ch[0], cr = ch[1];
        const std::uint64_t* lrow = row(cl);
        const std::uint64_t* rrow = row(cr);
        std::uint64_t lm = lrow[min_arg[cl]], rm = rrow[min_arg[cr]];
        bool done = false;
        // keep both edges
        for (size_t sub = b;; sub = (sub - 1) & b) {
            if (sat_add(lrow[sub], rrow[b ^ sub]) == want) {
                stack.push_back({cl, (std::uint32_t)sub});
                stack.push_back({cr, (std::uint32_t)(b ^ sub)});
                done = true;
                break;
            }
            if (sub == 0) break;
        }
        if (done) continue;
        if (sat_add(sat_add(t.up_cost[cl], lm), rrow[b]) == want) {
            take_edge(cl);
            stack.push_back({cl, min_arg[cl]});
            stack.push_back({cr, b});
            continue;
        }
        if (sat_add(sat_add(t.up_cost[cr], rm), lrow[b]) == want) {
            take_edge(cr);
            stack.push_back({cr, min_arg[cr]});
            stack.push_back({cl, b});
            continue;
        }
        if (b == 0 &&
            sat_add(sat_add(t.up_cost[cl], t.up_cost[cr]), sat_add(lm, rm)) == want) {
            take_edge(cl);
            take_edge(cr);
            stack.push_back({cl, min_arg[cl]});
            stack.push_back({cr, min_arg[cr]});
            continue;
        }
        throw std::logic_error("pattern backtracking lost the optimum");
    }
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    res.cost = opt;
    res.cut = std::move(cut);
    return res;
}

SolveResult solve_gmwct_via_mct(const Instance& inst, int k)
{
    return solve_decision(inst, k);
}

SolveResult solve_gmwct_min(const Instance& inst) { return solve_min(inst); }

} // namespace tct

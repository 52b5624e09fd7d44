#include "tct/auxgraph.hpp"

#include <algorithm>
#include <cassert>

namespace tct {

int LeafGraph::max_degree() const
{
    int d = 0;
    for (const auto& [v, nbs] : adj) d = std::max(d, (int)nbs.size());
    return d;
}

bool ComponentShape::contains(Vertex v) const
{
    return std::find(seq.begin(), seq.end(), v) != seq.end();
}

std::vector<ComponentShape> decompose_deg2(const LeafGraph& g)
{
    if (g.max_degree() > 2) throw DegreeTooHigh();
    std::vector<ComponentShape> out;
    std::set<Vertex> seen;

    // paths first: walk from every unvisited degree<=1 vertex
    for (Vertex v : g.nodes) {
        if (seen.count(v) || g.degree(v) > 1) continue;
        ComponentShape s;
        s.kind = ShapeKind::path;
        Vertex prev = -1, cur = v;
        while (true) {
            s.seq.push_back(cur);
            seen.insert(cur);
            Vertex next = -1;
            for (Vertex nb : g.neighbors(cur))
                if (nb != prev) next = nb;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (s.seq.back() < s.seq.front()) std::reverse(s.seq.begin(), s.seq.end());
        out.push_back(std::move(s));
    }
    // remaining vertices lie on cycles
    for (Vertex v : g.nodes) {
        if (seen.count(v)) continue;
        ComponentShape s;
        s.kind = ShapeKind::cycle;
        Vertex start = v;
        // rotate to lowest id in the cycle
        {
            Vertex cur = v, prev = -1;
            Vertex lowest = v;
            do {
                Vertex next = -1;
                for (Vertex nb : g.neighbors(cur))
                    if (nb != prev) {
                        next = nb;
                        break;
                    }
                prev = cur;
                cur = next;
                lowest = std::min(lowest, cur);
            } while (cur != v);
            start = lowest;
        }
        Vertex second = std::min(g.neighbors(start)[0], g.neighbors(start)[1]);
        Vertex prev = start, cur = second;
        s.seq.push_back(start);
        seen.insert(start);
        while (cur != start) {
            s.seq.push_back(cur);
            seen.insert(cur);
            Vertex next = -1;
            for (Vertex nb : g.neighbors(cur))
                if (nb != prev) next = nb;
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const ComponentShape& a, const ComponentShape& b) {
                  return a.seq.front() < b.seq.front();
              });
    return out;
}

std::vector<Vertex> path_cover_with_endpoint(const ComponentShape& path, Vertex e)
{
    assert(path.kind == ShapeKind::path && path.length() % 2 == 1);
    std::vector<Vertex> seq = path.seq;
    if (seq.back() == e) std::reverse(seq.begin(), seq.end());
    assert(seq.front() == e);
    std::vector<Vertex> cover;
    for (size_t i = 0; i < seq.size(); i += 2) cover.push_back(seq[i]);
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::vector<Vertex> even_path_cover(const ComponentShape& path)
{
    assert(path.kind == ShapeKind::path && path.length() % 2 == 0);
    std::vector<Vertex> cover;
    for (size_t i = 1; i < path.seq.size(); i += 2) cover.push_back(path.seq[i]);
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> even_cycle_covers(const ComponentShape& c)
{
    assert(c.kind == ShapeKind::cycle && c.length() % 2 == 0);
    std::vector<Vertex> a, b;
    for (size_t i = 0; i < c.seq.size(); ++i)
        (i % 2 == 0 ? a : b).push_back(c.seq[i]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {a, b};
}

VcResult min_vc_deg2(const LeafGraph& g)
{
    VcResult r;
    r.shapes = decompose_deg2(g);
    for (const ComponentShape& s : r.shapes) {
        std::vector<Vertex> cover;
        int len = s.length();
        if (s.kind == ShapeKind::path) {
            if (len == 0) continue; // isolated vertex, empty cover
            if (len % 2 == 0)
                cover = even_path_cover(s);
            else
                cover = path_cover_with_endpoint(s, s.seq.front());
        } else {
            if (len % 2 == 0) {
                cover = even_cycle_covers(s).first;
            } else {
                // odd cycle v0..v_{2m}: {v0, v2, ..., v_2m} hits every edge
                for (size_t i = 0; i < s.seq.size(); i += 2) cover.push_back(s.seq[i]);
            }
        }
        r.tau += (int)cover.size();
        r.cover.insert(r.cover.end(), cover.begin(), cover.end());
    }
    std::sort(r.cover.begin(), r.cover.end());
    return r;
}

namespace {

constexpr int kInf = 1 << 28;

// min cover of a path segment given per-position force flags; state = taken?
int path_dp(const std::vector<char>& forced, int first_state)
{
    // first_state: 0 = first vertex excluded, 1 = included, 2 = free
    int n = (int)forced.size();
    std::vector<int> cur(2, kInf);
    if (first_state != 0) cur[1] = 1;
    if (first_state != 1 && !forced[0]) cur[0] = 0;
    for (int i = 1; i < n; ++i) {
        std::vector<int> nxt(2, kInf);
        // take vertex i
        nxt[1] = std::min(cur[0], cur[1]);
        if (nxt[1] < kInf) nxt[1] += 1;
        // skip vertex i: previous must be taken, and i must not be forced
        if (!forced[i]) nxt[0] = cur[1];
        cur = std::move(nxt);
    }
    return std::min(cur[0], cur[1]);
}

} // namespace

int vc_with_forced(const LeafGraph& g, const std::set<Vertex>& forced)
{
    int total = 0;
    for (const ComponentShape& s : decompose_deg2(g)) {
        std::vector<char> f(s.seq.size(), 0);
        for (size_t i = 0; i < s.seq.size(); ++i)
            if (forced.count(s.seq[i])) f[i] = 1;
        if (s.kind == ShapeKind::path) {
            if (s.seq.size() == 1) {
                total += f[0] ? 1 : 0;
                continue;
            }
            total += path_dp(f, 2);
        } else {
            // branch on the first cycle vertex; when excluded its two
            // neighbors (seq[1] and seq.back()) must both be taken
            int best = kInf;
            { // seq[0] taken: remaining path seq[1..] free at both ends
                std::vector<char> f2(f.begin() + 1, f.end());
                int v = path_dp(f2, 2);
                if (v < kInf) best = std::min(best, v + 1);
            }
            if (!f[0]) { // seq[0] excluded: force both neighbors
                std::vector<char> f2(f.begin() + 1, f.end());
                f2.front() = 1;
                f2.back() = 1;
                best = std::min(best, path_dp(f2, 2));
            }
            total += best;
        }
    }
    return total;
}

bool in_some_min_vc(const LeafGraph& g, Vertex v)
{
    return vc_with_forced(g, {v}) == min_vc_deg2(g).tau;
}

LeafGraph build_gu(const WorkingForest& f, Vertex u)
{
    LeafGraph g;
    g.owner = u;
    for (Vertex c : f.children(u))
        if (f.childless(c)) g.nodes.push_back(c);
    std::sort(g.nodes.begin(), g.nodes.end());
    for (Vertex v : g.nodes) g.adj[v];
    for (Vertex v : g.nodes)
        for (Vertex w : g.nodes)
            if (v < w && f.request_between(v, w)) {
                g.adj[v].push_back(w);
                g.adj[w].push_back(v);
            }
    return g;
}

std::vector<SpecialQuadruple> detect_special_quadruples(const WorkingForest& f, Vertex p)
{
    std::vector<SpecialQuadruple> out;
    std::vector<Vertex> kids = f.children(p);
    std::sort(kids.begin(), kids.end());
    for (Vertex w : kids) {
        if (f.childless(w)) continue;
        std::vector<Vertex> wc = f.children(w);
        if (wc.size() != 2) continue; // (1) exactly two children
        std::sort(wc.begin(), wc.end());
        Vertex u = wc[0], v = wc[1];
        if (!f.childless(u) || !f.childless(v)) continue;
        if (!f.request_between(u, v)) continue;

        auto targets_in_tp = [&](Vertex x) {
            std::vector<Vertex> out2;
            for (Vertex t : f.request_partners(x))
                if (f.in_subtree(t, p) && !f.in_subtree(t, w)) out2.push_back(t);
            std::sort(out2.begin(), out2.end());
            return out2;
        };
        // (2) w's only request into T_p \ T_w goes to a leaf sibling w'
        std::vector<Vertex> wt = targets_in_tp(w);
        if (wt.size() != 1) continue;
        Vertex wp = wt[0];
        if (f.parent(wp) != p || !f.childless(wp)) continue;
        // (3) both children's requests into T_p \ T_w go only to w'
        std::vector<Vertex> ut = targets_in_tp(u), vt = targets_in_tp(v);
        if (ut != std::vector<Vertex>{wp} || vt != std::vector<Vertex>{wp}) continue;
        // (4) w' has no request into T_p outside T_w
        bool ok = true;
        for (Vertex t : f.request_partners(wp))
            if (f.in_subtree(t, p) && !f.in_subtree(t, w)) ok = false;
        if (!ok) continue;
        out.push_back({w, wp, u, v});
    }
    return out;
}

LeafGraph build_gstar(const WorkingForest& f, Vertex p)
{
    return build_gstar(f, p, detect_special_quadruples(f, p));
}

LeafGraph build_gstar(const WorkingForest& f, Vertex p,
                      const std::vector<SpecialQuadruple>& quads)
{
    std::set<Vertex> excluded;
    for (const SpecialQuadruple& q : quads) {
        excluded.insert(q.w);
        excluded.insert(q.w_prime);
        excluded.insert(q.u);
        excluded.insert(q.v);
    }
    LeafGraph g;
    g.owner = p;
    for (Vertex c : f.children(p)) {
        if (f.childless(c)) {
            if (!excluded.count(c)) g.nodes.push_back(c);
        } else {
            for (Vertex gc : f.children(c))
                if (f.childless(gc) && !excluded.count(gc)) g.nodes.push_back(gc);
        }
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    for (Vertex v : g.nodes) g.adj[v];
    for (Vertex v : g.nodes)
        for (Vertex w : g.nodes)
            if (v < w && f.request_between(v, w)) {
                g.adj[v].push_back(w);
                g.adj[w].push_back(v);
            }
    return g;
}

const char* group_name(GroupKind k)
{
    switch (k) {
    case GroupKind::gp1: return "gp1";
    case GroupKind::gp2: return "gp2";
    case GroupKind::gp3: return "gp3";
    case GroupKind::gp4: return "gp4";
    case GroupKind::gp5: return "gp5";
    case GroupKind::gp6: return "gp6";
    case GroupKind::gp7: return "gp7";
    }
    return "?";
}

std::vector<GroupTag> classify_groups(const LeafGraph& gstar,
                                      const std::vector<SpecialQuadruple>& quads,
                                      const WorkingForest& f)
{
    Vertex p = gstar.owner;
    std::vector<GroupTag> out;
    for (const ComponentShape& s : decompose_deg2(gstar)) {
        // does the whole component live inside one G_{w'}?
        Vertex common = -1;
        bool single_gw = true;
        for (Vertex v : s.seq) {
            Vertex par = f.parent(v);
            if (par == p) {
                single_gw = false;
                break;
            }
            if (common < 0) common = par;
            if (par != common) {
                single_gw = false;
                break;
            }
        }
        GroupTag t;
        t.members = s.seq;
        t.shape = s;
        t.important_owner = single_gw ? common : -1;
        int len = s.length();
        if (s.kind == ShapeKind::path) {
            if (len == 1)
                t.kind = single_gw ? GroupKind::gp1 : GroupKind::gp2;
            else if (len == 3)
                t.kind = single_gw ? GroupKind::gp7 : GroupKind::gp3;
            else
                throw UnclassifiableComponent("star-graph path of length " +
                                              std::to_string(len));
            if (t.kind == GroupKind::gp2) {
                for (Vertex v : s.seq)
                    if (f.parent(v) != p)
                        throw UnclassifiableComponent("mixed length-1 star path");
            }
        } else {
            if (single_gw)
                t.kind = GroupKind::gp7;
            else if (len == 3)
                t.kind = GroupKind::gp4;
            else if (len == 5)
                t.kind = GroupKind::gp5;
            else
                throw UnclassifiableComponent("star-graph cycle of length " +
                                              std::to_string(len));
        }
        out.push_back(std::move(t));
    }
    for (const SpecialQuadruple& q : quads) {
        GroupTag t;
        t.kind = GroupKind::gp6;
        t.members = {q.w, q.w_prime, q.u, q.v};
        t.important_owner = q.w;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace tct

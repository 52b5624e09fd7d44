#include "tct/solver.hpp"

#include "tct/auxgraph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <set>

// Branch-and-search decision solver. Every node is reduced to a fixpoint and
// the first applicable phase either applies a forced edit in place or emits a
// branch plan whose sides are explored in order on deep copies. Each side
// declares how many edges it cuts; the apply step asserts that declaration,
// which keeps the recurrences honest and the leaf count within rho^k.

namespace tct {

double search_tree_rho() { return std::sqrt(std::sqrt(2.0) + 1.0); }

namespace {

struct Edit {
    enum class Kind { cut, keep, favor };
    Kind kind;
    Vertex v = -1;
    std::vector<Vertex> chain; // favor only
    static Edit Cut(Vertex v) { return {Kind::cut, v, {}}; }
    static Edit Keep(Vertex v) { return {Kind::keep, v, {}}; }
    static Edit Favor(Vertex v, std::vector<Vertex> chain)
    {
        return {Kind::favor, v, std::move(chain)};
    }
};

struct Side {
    std::vector<Edit> edits;
    int declared = 0; // number of cut edits = the recurrence decrement
};

struct Plan {
    std::string rule;
    std::vector<Side> sides;
};

Side make_side(std::vector<Edit> edits)
{
    Side s;
    s.edits = std::move(edits);
    for (const Edit& e : s.edits)
        if (e.kind == Edit::Kind::cut) ++s.declared;
    return s;
}

// vertices strictly between v and `top`; keeping v drags their parent edges
std::vector<Vertex> chain_up(const WorkingForest& f, Vertex v, Vertex top)
{
    std::vector<Vertex> chain;
    if (v == top) return chain;
    for (Vertex x = f.parent(v); x >= 0 && x != top; x = f.parent(x)) chain.push_back(x);
    return chain;
}

struct Ctx {
    std::vector<int> depth;
    Vertex w_sel = -1;
    Vertex comp_root = -1;
    std::vector<Vertex> deep_importants; // max-depth importants of the component
    std::vector<Vertex> all_importants;  // depth desc, then id asc
    std::vector<Vertex> zone_parents;    // parents of deep importants, asc
};

class Solver {
public:
    Solver(const Instance& inst, int k) : inst_(inst), k_(k) { stats_.initial_k = k; }

    SolveResult run()
    {
        WorkingForest f(inst_, k_);
        SolveResult r;
        auto cut = solve_node(std::move(f), 0);
        if (cut) std::sort(cut->begin(), cut->end());
        r.cut = std::move(cut);
        r.stats = stats_;
        return r;
    }

private:
    const Instance& inst_;
    int k_;
    SearchStats stats_;

    using CutList = std::vector<EdgeId>;

    // ---- side application --------------------------------------------------

    enum class ApplyOutcome { ok, pruned };

    ApplyOutcome apply_side(WorkingForest& f, const Side& side, int node_id)
    {
        std::map<Vertex, std::vector<Vertex>> local_favor;
        std::set<Vertex> kept_chain; // merged chain reps of kept favored vertices
        int actual = 0;
        for (const Edit& e : side.edits) {
            switch (e.kind) {
            case Edit::Kind::favor:
                local_favor[e.v] = e.chain;
                f.favor(e.v, e.chain, node_id);
                break;
            case Edit::Kind::cut: {
                Vertex c = f.find(e.v);
                if (!f.live(c) || f.parent(c) < 0)
                    throw CaseAnalysisViolation("cut edit on a root or dead vertex");
                if (kept_chain.count(c))
                    throw CaseAnalysisViolation("cut inside a kept favored chain");
                if (f.cut_child(c, node_id) == EditStatus::budget_exhausted)
                    return ApplyOutcome::pruned;
                ++actual;
                break;
            }
            case Edit::Kind::keep: {
                Vertex c = f.find(e.v);
                if (!f.live(c) || f.parent(c) < 0)
                    throw CaseAnalysisViolation("keep edit on a root or dead vertex");
                std::vector<Vertex> chain;
                if (auto it = local_favor.find(e.v); it != local_favor.end())
                    chain = it->second;
                if (f.contract_child(c, node_id) == EditStatus::infeasible_branch)
                    return ApplyOutcome::pruned;
                for (Vertex x : chain) {
                    Vertex cx = f.find(x);
                    if (!f.live(cx)) continue; // merged earlier on the chain
                    if (f.parent(cx) < 0)
                        throw CaseAnalysisViolation("favored chain edge was cut");
                    if (f.contract_child(cx, node_id) == EditStatus::infeasible_branch)
                        return ApplyOutcome::pruned;
                    kept_chain.insert(f.find(cx));
                }
                break;
            }
            }
        }
        if (actual < side.declared)
            throw CaseAnalysisViolation("side realized fewer cuts than declared");
        return ApplyOutcome::ok;
    }

    void check_plan(const Plan& plan) const
    {
        double rho = search_tree_rho();
        double sum = 0;
        for (const Side& s : plan.sides) {
            if (s.declared < 1)
                throw CaseAnalysisViolation(plan.rule + ": side cuts nothing");
            sum += std::pow(rho, -s.declared);
        }
        if (sum > 1.0 + 1e-9)
            throw CaseAnalysisViolation(plan.rule + ": recurrence exceeds rho");
    }

    bool forced_cuts(WorkingForest& f, const std::vector<Vertex>& cuts, int node_id)
    {
        for (Vertex v : cuts) {
            Vertex c = f.find(v);
            if (!f.live(c) || f.parent(c) < 0)
                throw CaseAnalysisViolation("forced cut on a root or dead vertex");
            if (f.cut_child(c, node_id) == EditStatus::budget_exhausted) return false;
        }
        return true;
    }

    // ---- selection -----------------------------------------------------------

    std::optional<Ctx> make_ctx(const WorkingForest& f) const
    {
        Ctx c;
        c.depth = f.depths();
        Vertex best = -1;
        for (Vertex v : f.live_vertices()) {
            if (!f.important(v)) continue;
            if (best < 0 || c.depth[v] > c.depth[best] ||
                (c.depth[v] == c.depth[best] && v < best))
                best = v;
        }
        if (best < 0) return std::nullopt;
        c.w_sel = best;
        c.comp_root = f.component_root(best);
        for (Vertex v : f.component_vertices(c.comp_root))
            if (f.important(v)) c.all_importants.push_back(v);
        std::sort(c.all_importants.begin(), c.all_importants.end(),
                  [&](Vertex a, Vertex b) {
                      if (c.depth[a] != c.depth[b]) return c.depth[a] > c.depth[b];
                      return a < b;
                  });
        for (Vertex v : c.all_importants)
            if (c.depth[v] == c.depth[c.w_sel]) c.deep_importants.push_back(v);
        std::sort(c.deep_importants.begin(), c.deep_importants.end());
        std::set<Vertex> zp;
        for (Vertex w : c.deep_importants)
            if (f.parent(w) >= 0) zp.insert(f.parent(w));
        c.zone_parents.assign(zp.begin(), zp.end());
        return c;
    }

    // ---- branch rules over G_w -----------------------------------------------

    std::optional<Plan> aux_branch(const WorkingForest& f, const Ctx& ctx) const
    {
        for (Vertex w : ctx.all_importants) {
            LeafGraph g = build_gu(f, w);
            for (Vertex v : g.nodes)
                if (g.degree(v) >= 3) {
                    Plan p;
                    p.rule = "deg3_branch";
                    p.sides.push_back(make_side({Edit::Cut(v)}));
                    std::vector<Edit> s2;
                    for (Vertex nb : g.neighbors(v)) s2.push_back(Edit::Cut(nb));
                    p.sides.push_back(make_side(std::move(s2)));
                    return p;
                }
        }
        for (Vertex w : ctx.all_importants) {
            LeafGraph g = build_gu(f, w);
            for (const ComponentShape& s : decompose_deg2(g)) {
                if (s.kind != ShapeKind::path) continue;
                int len = s.length();
                if (len <= 3 || len % 2 == 0) continue;
                Vertex e = std::min(s.seq.front(), s.seq.back());
                Plan p;
                p.rule = "long_odd_path_branch";
                std::vector<Edit> s1;
                for (Vertex c : path_cover_with_endpoint(s, e)) s1.push_back(Edit::Cut(c));
                p.sides.push_back(make_side(std::move(s1)));
                Vertex nb = s.seq.front() == e ? s.seq[1] : s.seq[s.seq.size() - 2];
                p.sides.push_back(make_side({Edit::Cut(nb)}));
                return p;
            }
        }
        return std::nullopt;
    }

    // ---- star component: one minimum cover settles it --------------------------

    bool star_solve(WorkingForest& f, const Ctx& ctx, int node_id)
    {
        LeafGraph g = build_gu(f, ctx.w_sel);
        stats_.rules.bump("star_cover");
        return forced_cuts(f, min_vc_deg2(g).cover, node_id);
    }

    // ---- the case analysis at the deepest important vertices -------------------

    std::optional<Plan> cases_phase(const WorkingForest& f, const Ctx& ctx) const
    {
        using Fn = std::optional<Plan> (Solver::*)(const WorkingForest&, Vertex) const;
        static const Fn steps[] = {
            &Solver::case_nonleaf_sibling,
            &Solver::case_deg2_cross,
            &Solver::case_path3_cross,
            &Solver::case_nonleaf_uncle,
            &Solver::case_multi_cross,
            &Solver::case_leaf_sibling_bigcover,
            &Solver::case_leaf_sibling_extra,
            &Solver::case_leaf_sibling_partner,
            &Solver::case_busy_leaf,
            &Solver::case_two_edges,
        };
        for (Fn step : steps)
            for (Vertex w : ctx.deep_importants)
                if (auto p = (this->*step)(f, w)) return p;
        return std::nullopt;
    }

    std::optional<Plan> case_nonleaf_sibling(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        for (Vertex x : targets_within(f, w, p, w)) {
            if (f.parent(x) != p || f.childless(x)) continue;
            Plan plan;
            plan.rule = "nonleaf_sibling";
            std::vector<Edit> s1{Edit::Cut(w)};
            for (Vertex c : min_vc_deg2(build_gu(f, w)).cover) s1.push_back(Edit::Cut(c));
            std::vector<Edit> s2{Edit::Cut(x)};
            for (Vertex c : min_vc_deg2(build_gu(f, x)).cover) s2.push_back(Edit::Cut(c));
            plan.sides.push_back(make_side(std::move(s1)));
            plan.sides.push_back(make_side(std::move(s2)));
            return plan;
        }
        return std::nullopt;
    }

    std::optional<Plan> case_deg2_cross(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        LeafGraph g = build_gu(f, w);
        for (Vertex u : g.nodes) {
            if (g.degree(u) != 2) continue;
            std::vector<Vertex> tg = targets_within(f, u, p, w);
            if (tg.empty()) continue;
            Vertex x = tg.front();
            Vertex n1 = g.neighbors(u)[0], n2 = g.neighbors(u)[1];
            if (n1 > n2) std::swap(n1, n2);
            Plan plan;
            plan.rule = "deg2_cross";
            plan.sides.push_back(make_side({Edit::Cut(u)}));
            std::vector<Edit> s2{Edit::Favor(u, {w})};
            if (f.parent(x) != p) s2.push_back(Edit::Favor(x, {f.parent(x)}));
            s2.push_back(Edit::Keep(u));
            s2.push_back(Edit::Cut(n1));
            s2.push_back(Edit::Cut(n2));
            s2.push_back(Edit::Cut(x));
            plan.sides.push_back(make_side(std::move(s2)));
            return plan;
        }
        return std::nullopt;
    }

    std::optional<Plan> case_path3_cross(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        LeafGraph g = build_gu(f, w);
        for (const ComponentShape& s : decompose_deg2(g)) {
            if (s.kind != ShapeKind::path || s.length() != 3) continue;
            for (Vertex u : {std::min(s.seq.front(), s.seq.back()),
                             std::max(s.seq.front(), s.seq.back())}) {
                std::vector<Vertex> tg = targets_within(f, u, p, w);
                if (tg.empty()) continue;
                Vertex x = tg.front();
                std::vector<Vertex> seq = s.seq;
                if (seq.back() == u) std::reverse(seq.begin(), seq.end());
                Plan plan;
                plan.rule = "path3_cross";
                plan.sides.push_back(make_side({Edit::Cut(u), Edit::Cut(seq[2])}));
                std::vector<Edit> s2{Edit::Favor(u, {w})};
                if (f.parent(x) != p) s2.push_back(Edit::Favor(x, {f.parent(x)}));
                s2.push_back(Edit::Keep(u));
                s2.push_back(Edit::Cut(seq[1]));
                s2.push_back(Edit::Cut(x));
                plan.sides.push_back(make_side(std::move(s2)));
                return plan;
            }
        }
        return std::nullopt;
    }

    std::optional<Plan> case_nonleaf_uncle(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        LeafGraph g = build_gu(f, w);
        for (Vertex u : g.nodes) {
            for (Vertex x : targets_within(f, u, p, w)) {
                if (f.parent(x) != p || f.childless(x)) continue;
                if (g.degree(u) != 1)
                    throw CaseAnalysisViolation("crossed vertex not on an isolated edge");
                Vertex v = g.neighbors(u)[0];
                Plan plan;
                plan.rule = "nonleaf_uncle";
                plan.sides.push_back(make_side({Edit::Cut(u)}));
                std::vector<Edit> s2{Edit::Favor(u, {w}), Edit::Keep(u), Edit::Cut(v),
                                     Edit::Cut(x)};
                for (Vertex c : min_vc_deg2(build_gu(f, x)).cover)
                    s2.push_back(Edit::Cut(c));
                plan.sides.push_back(make_side(std::move(s2)));
                return plan;
            }
        }
        return std::nullopt;
    }

    std::optional<Plan> case_multi_cross(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        LeafGraph g = build_gu(f, w);
        for (Vertex u : g.nodes) {
            std::vector<Vertex> tg = targets_within(f, u, p, w);
            if (tg.size() < 2) continue;
            if (g.degree(u) != 1)
                throw CaseAnalysisViolation("multi-crossed vertex off an isolated edge");
            Vertex v = g.neighbors(u)[0];
            Vertex t1 = tg[0], t2 = tg[1];
            Vertex p1 = f.parent(t1), p2 = f.parent(t2);
            Plan plan;
            if (p1 != p2 || (p1 == p && p2 == p)) {
                plan.rule = "multi_cross_split";
                std::vector<Edit> s1{Edit::Favor(u, {w})};
                for (Vertex t : {t1, t2})
                    if (f.parent(t) != p) s1.push_back(Edit::Favor(t, {f.parent(t)}));
                s1.push_back(Edit::Keep(u));
                s1.push_back(Edit::Cut(v));
                s1.push_back(Edit::Cut(t1));
                s1.push_back(Edit::Cut(t2));
                plan.sides.push_back(make_side(std::move(s1)));
            } else {
                plan.rule = "multi_cross_shared";
                Vertex w2 = p1;
                LeafGraph g2 = build_gu(f, w2);
                std::vector<Edit> s1;
                if (g2.has(t1) && g2.has(t2) &&
                    vc_with_forced(g2, {t1, t2}) == min_vc_deg2(g2).tau) {
                    s1 = {Edit::Favor(u, {w}),   Edit::Favor(t1, {w2}),
                          Edit::Favor(t2, {w2}), Edit::Keep(u),
                          Edit::Cut(v),          Edit::Cut(t1),
                          Edit::Cut(t2)};
                } else {
                    s1 = {Edit::Favor(u, {w}), Edit::Keep(u), Edit::Cut(v), Edit::Cut(w2),
                          Edit::Cut(std::min(t1, t2))};
                }
                plan.sides.push_back(make_side(std::move(s1)));
            }
            plan.sides.push_back(make_side({Edit::Cut(u)}));
            return plan;
        }
        return std::nullopt;
    }

    // first leaf-sibling cross target of w plus G_w's single edge, when tau = 1
    bool leaf_sibling_setup(const WorkingForest& f, Vertex w, Vertex& wp, Vertex& cu,
                            Vertex& cv) const
    {
        Vertex p = f.parent(w);
        wp = -1;
        for (Vertex x : targets_within(f, w, p, w))
            if (f.parent(x) == p && f.childless(x)) {
                wp = x;
                break;
            }
        if (wp < 0) return false;
        VcResult vc = min_vc_deg2(build_gu(f, w));
        if (vc.tau != 1) return false;
        if (vc.shapes.size() != 1 || vc.shapes[0].length() != 1)
            throw CaseAnalysisViolation("tau 1 but G_w is not a single edge");
        cu = vc.shapes[0].seq[0];
        cv = vc.shapes[0].seq[1];
        if (cu > cv) std::swap(cu, cv);
        return true;
    }

    std::optional<Plan> case_leaf_sibling_bigcover(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        for (Vertex x : targets_within(f, w, p, w)) {
            if (f.parent(x) != p || !f.childless(x)) continue;
            VcResult vc = min_vc_deg2(build_gu(f, w));
            if (vc.tau < 2) return std::nullopt;
            Plan plan;
            plan.rule = "leaf_sibling_bigcover";
            std::vector<Edit> s1{Edit::Cut(w)};
            for (Vertex c : vc.cover) s1.push_back(Edit::Cut(c));
            plan.sides.push_back(make_side(std::move(s1)));
            plan.sides.push_back(make_side({Edit::Cut(x)}));
            return plan;
        }
        return std::nullopt;
    }

    std::optional<Plan> case_leaf_sibling_extra(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        Vertex wp = -1, cu = -1, cv = -1;
        if (!leaf_sibling_setup(f, w, wp, cu, cv)) return std::nullopt;
        for (Vertex x : targets_within(f, w, p, w)) {
            if (x == wp || f.parent(x) != p) continue;
            Plan plan;
            plan.rule = "leaf_sibling_extra";
            plan.sides.push_back(make_side({Edit::Cut(w), Edit::Cut(cu)}));
            plan.sides.push_back(make_side({Edit::Cut(wp), Edit::Cut(x)}));
            return plan;
        }
        for (Vertex u : {cu, cv}) {
            Vertex v = u == cu ? cv : cu;
            for (Vertex x : targets_within(f, u, p, w)) {
                if (x == wp) continue;
                Plan plan;
                plan.rule = "leaf_sibling_extra";
                plan.sides.push_back(make_side({Edit::Cut(u)}));
                std::vector<Edit> s2{Edit::Favor(u, {w})};
                if (f.parent(x) != p) s2.push_back(Edit::Favor(x, {f.parent(x)}));
                s2.push_back(Edit::Keep(u));
                s2.push_back(Edit::Cut(v));
                s2.push_back(Edit::Cut(wp));
                s2.push_back(Edit::Cut(x));
                plan.sides.push_back(make_side(std::move(s2)));
                return plan;
            }
        }
        return std::nullopt;
    }

    std::optional<Plan> case_leaf_sibling_partner(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        Vertex wp = -1, cu = -1, cv = -1;
        if (!leaf_sibling_setup(f, w, wp, cu, cv)) return std::nullopt;
        for (Vertex t : targets_within(f, wp, p, w)) {
            Plan plan;
            plan.rule = "leaf_sibling_partner";
            plan.sides.push_back(make_side({Edit::Cut(wp)}));
            std::vector<Edit> s2;
            if (f.parent(t) != p) s2.push_back(Edit::Favor(t, {f.parent(t)}));
            s2.push_back(Edit::Cut(w));
            s2.push_back(Edit::Cut(cu));
            s2.push_back(Edit::Cut(t));
            plan.sides.push_back(make_side(std::move(s2)));
            return plan;
        }
        return std::nullopt;
    }

    std::optional<Plan> case_busy_leaf(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, p);
        std::set<Vertex> in_quad;
        for (const auto& q : quads)
            in_quad.insert({q.w, q.w_prime, q.u, q.v});
        std::vector<Vertex> leaf_kids;
        for (Vertex c : f.children(p))
            if (f.childless(c) && !in_quad.count(c)) leaf_kids.push_back(c);
        std::sort(leaf_kids.begin(), leaf_kids.end());

        for (Vertex wp : leaf_kids) {
            std::vector<Vertex> sibs, nephews;
            for (Vertex t : targets_within(f, wp, p, -1)) {
                if (f.parent(t) == p && f.childless(t))
                    sibs.push_back(t);
                else if (f.parent(t) != p && f.parent(t) >= 0 &&
                         f.parent(f.parent(t)) == p && f.childless(t))
                    nephews.push_back(t);
            }
            if (sibs.size() + nephews.size() < 3) continue;
            Plan plan;
            plan.rule = "busy_leaf";
            plan.sides.push_back(make_side({Edit::Cut(wp)}));
            if (sibs.size() >= 3) {
                plan.sides.push_back(make_side(
                    {Edit::Cut(sibs[0]), Edit::Cut(sibs[1]), Edit::Cut(sibs[2])}));
                return plan;
            }
            for (size_t i = 0; i < nephews.size(); ++i)
                for (size_t j = i + 1; j < nephews.size(); ++j) {
                    Vertex x = nephews[i], y = nephews[j];
                    if (f.parent(x) != f.parent(y) || !f.request_between(x, y)) continue;
                    Vertex z = -1;
                    for (Vertex t : sibs)
                        if (t != x && t != y) z = z < 0 ? t : z;
                    if (z < 0)
                        for (Vertex t : nephews)
                            if (t != x && t != y) z = z < 0 ? t : z;
                    if (z < 0) continue;
                    std::vector<Edit> s2;
                    if (f.parent(z) != p) s2.push_back(Edit::Favor(z, {f.parent(z)}));
                    s2.push_back(Edit::Cut(f.parent(x)));
                    s2.push_back(Edit::Cut(std::min(x, y)));
                    s2.push_back(Edit::Cut(z));
                    plan.sides.push_back(make_side(std::move(s2)));
                    return plan;
                }
            std::vector<Edit> s2;
            for (Vertex t : nephews) s2.push_back(Edit::Favor(t, {f.parent(t)}));
            for (Vertex t : sibs) s2.push_back(Edit::Cut(t));
            for (Vertex t : nephews) s2.push_back(Edit::Cut(t));
            plan.sides.push_back(make_side(std::move(s2)));
            return plan;
        }
        return std::nullopt;
    }

    std::optional<Plan> case_two_edges(const WorkingForest& f, Vertex w) const
    {
        Vertex p = f.parent(w);
        LeafGraph g = build_gu(f, w);
        struct CrossedEdge {
            Vertex a, b, ta, tb;
        };
        std::vector<CrossedEdge> edges;
        for (const ComponentShape& s : decompose_deg2(g)) {
            if (s.kind != ShapeKind::path || s.length() != 1) continue;
            Vertex a = s.seq[0], b = s.seq[1];
            std::vector<Vertex> ta = targets_within(f, a, p, w);
            std::vector<Vertex> tb = targets_within(f, b, p, w);
            if (ta.empty() || tb.empty()) continue;
            if (ta.size() > 1 || tb.size() > 1)
                throw CaseAnalysisViolation("several cross requests survived the cases");
            edges.push_back({a, b, ta[0], tb[0]});
        }
        if (edges.size() < 2) return std::nullopt;
        CrossedEdge e1 = edges[0], e2 = edges[1];
        auto is_uncle = [&](Vertex t) { return f.parent(t) == p; };
        VcResult vc = min_vc_deg2(g);

        for (const CrossedEdge& e : {e1, e2}) {
            if (e.ta != e.tb || !is_uncle(e.ta)) continue;
            Plan plan;
            plan.rule = "two_edges_same_uncle";
            plan.sides.push_back(make_side({Edit::Cut(e.ta)}));
            std::vector<Edit> s2{Edit::Keep(e.ta), Edit::Cut(w)};
            for (Vertex c : vc.cover) s2.push_back(Edit::Cut(c));
            plan.sides.push_back(make_side(std::move(s2)));
            return plan;
        }
        {
            Vertex u = e1.a, v = e1.b, x = e2.a, y = e2.b;
            Vertex tu = e1.ta, tv = e1.tb, tx = e2.ta, ty = e2.tb;
            bool matched = false;
            if (tu == tx && tv == ty && is_uncle(tu) && is_uncle(tv)) matched = true;
            else if (tu == ty && tv == tx && is_uncle(tu) && is_uncle(tv)) {
                std::swap(x, y);
                matched = true;
            }
            if (matched) {
                Plan plan;
                plan.rule = "two_edges_paired_uncles";
                std::vector<Edit> s1{Edit::Cut(w)};
                for (Vertex c : vc.cover) s1.push_back(Edit::Cut(c));
                plan.sides.push_back(make_side(std::move(s1)));
                plan.sides.push_back(make_side({Edit::Keep(tv), Edit::Keep(w), Edit::Cut(tu),
                                                Edit::Cut(v), Edit::Cut(y)}));
                plan.sides.push_back(make_side({Edit::Cut(tv), Edit::Cut(u), Edit::Cut(x)}));
                return plan;
            }
        }
        {
            // one shared uncle between the edges, or none at all
            Vertex u = e1.a, x = e2.a;
            bool shared = false;
            if (is_uncle(e1.ta) && e1.ta == e2.ta) {
                u = e1.a; x = e2.a; shared = true;
            } else if (is_uncle(e1.ta) && e1.ta == e2.tb) {
                u = e1.a; x = e2.b; shared = true;
            } else if (is_uncle(e1.tb) && e1.tb == e2.ta) {
                u = e1.b; x = e2.a; shared = true;
            } else if (is_uncle(e1.tb) && e1.tb == e2.tb) {
                u = e1.b; x = e2.b; shared = true;
            }
            Vertex fv = u == e1.a ? e1.b : e1.a; // favored partner on edge 1
            Vertex fy = x == e2.a ? e2.b : e2.a; // favored partner on edge 2
            auto target_of = [&](Vertex c) { return targets_within(f, c, p, w).front(); };
            auto services = [&](Vertex kept1, Vertex kept2) {
                std::vector<Edit> out;
                Vertex q1 = target_of(kept1), q2 = target_of(kept2);
                if (q1 == q2)
                    throw CaseAnalysisViolation("kept endpoints share a cross target");
                if (!is_uncle(q1) && !is_uncle(q2) && f.parent(q1) == f.parent(q2) &&
                    f.request_between(q1, q2)) {
                    out.push_back(Edit::Cut(f.parent(q1)));
                    out.push_back(Edit::Cut(std::min(q1, q2)));
                    return out;
                }
                for (Vertex q : {q1, q2}) {
                    if (!is_uncle(q)) out.push_back(Edit::Favor(q, {f.parent(q)}));
                    out.push_back(Edit::Cut(q));
                }
                return out;
            };
            Plan plan;
            plan.rule = shared ? "two_edges_shared_uncle" : "two_edges_distinct";
            auto side = [&](Vertex cut1, Vertex cut2, Vertex kept1, Vertex kept2) {
                std::vector<Edit> s{Edit::Favor(fv, {w}), Edit::Favor(fy, {w})};
                s.push_back(Edit::Keep(kept1));
                s.push_back(Edit::Keep(kept2));
                s.push_back(Edit::Cut(cut1));
                s.push_back(Edit::Cut(cut2));
                for (const Edit& e : services(kept1, kept2)) s.push_back(e);
                return make_side(std::move(s));
            };
            plan.sides.push_back(side(u, x, fv, fy));
            plan.sides.push_back(side(u, fy, fv, x));
            plan.sides.push_back(side(fv, x, u, fy));
            plan.sides.push_back(make_side({Edit::Cut(fv), Edit::Cut(fy)}));
            return plan;
        }
    }

    // ---- star-graph phase ------------------------------------------------------

    struct PhaseAction {
        enum class Kind { none, applied, infeasible, plan } kind = Kind::none;
        Plan plan;
    };

    // The star-graph rules assume every in-zone request of a component vertex
    // runs along the component itself; a request hanging off to something
    // else in the zone (say a pending important sibling) breaks the cover
    // exchanges, so such components wait.
    bool shape_clean(const WorkingForest& f, Vertex p, const ComponentShape& s) const
    {
        std::set<Vertex> members(s.seq.begin(), s.seq.end());
        for (Vertex v : s.seq)
            for (Vertex t : f.request_partners(v))
                if (f.in_subtree(t, p) && !members.count(t)) return false;
        return true;
    }

    PhaseAction gstar_phase(WorkingForest& f, const Ctx& ctx, int node_id)
    {
        for (Vertex p : ctx.zone_parents) {
            std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, p);
            if (!quads.empty()) stats_.rules.bump("special_quadruple", quads.size());
            LeafGraph g = build_gstar(f, p, quads);
            if (g.max_degree() > 2)
                throw CaseAnalysisViolation("star graph with degree above two");
            std::vector<ComponentShape> all_shapes = decompose_deg2(g);
            std::vector<ComponentShape> shapes;
            for (ComponentShape& s : all_shapes)
                if (shape_clean(f, p, s)) shapes.push_back(std::move(s));

            for (const ComponentShape& s : shapes) {
                if (s.kind != ShapeKind::path || s.length() < 2 || s.length() % 2 != 0)
                    continue;
                stats_.rules.bump("gstar_even_path");
                if (!forced_cuts(f, even_path_cover(s), node_id))
                    return {PhaseAction::Kind::infeasible, {}};
                return {PhaseAction::Kind::applied, {}};
            }
            for (const ComponentShape& s : shapes) {
                if (s.kind != ShapeKind::path || s.length() <= 3 || s.length() % 2 == 0)
                    continue;
                Plan plan;
                plan.rule = "gstar_odd_path";
                Vertex e = std::min(s.seq.front(), s.seq.back());
                std::vector<Vertex> cov = path_cover_with_endpoint(s, e);
                std::set<Vertex> in_cov(cov.begin(), cov.end());
                std::vector<Edit> s1;
                for (Vertex c : cov) s1.push_back(Edit::Cut(c));
                for (Vertex v : s.seq)
                    if (!in_cov.count(v)) s1.push_back(Edit::Keep(v));
                plan.sides.push_back(make_side(std::move(s1)));
                Vertex nb = s.seq.front() == e ? s.seq[1] : s.seq[s.seq.size() - 2];
                plan.sides.push_back(make_side({Edit::Cut(nb)}));
                return {PhaseAction::Kind::plan, std::move(plan)};
            }
            for (const ComponentShape& s : shapes) {
                if (s.kind != ShapeKind::cycle || s.length() % 2 != 0) continue;
                auto [ca, cb] = even_cycle_covers(s);
                Plan plan;
                plan.rule = "gstar_even_cycle";
                std::vector<Edit> s1, s2;
                for (Vertex c : ca) s1.push_back(Edit::Cut(c));
                for (Vertex c : cb) s2.push_back(Edit::Cut(c));
                plan.sides.push_back(make_side(std::move(s1)));
                plan.sides.push_back(make_side(std::move(s2)));
                return {PhaseAction::Kind::plan, std::move(plan)};
            }
            for (const ComponentShape& s : shapes) {
                if (s.kind != ShapeKind::cycle || s.length() % 2 == 0 || s.length() < 7)
                    continue;
                std::set<Vertex> parents;
                for (Vertex v : s.seq) parents.insert(f.parent(v));
                if (parents.size() == 1 && !parents.count(p)) continue; // a group later
                Vertex u1 = -1;
                for (Vertex v : s.seq)
                    if (f.parent(v) == p && (u1 < 0 || v < u1)) u1 = v;
                if (u1 < 0)
                    throw CaseAnalysisViolation("odd star cycle without a leaf child");
                std::vector<Vertex> seq = s.seq;
                size_t pos = std::find(seq.begin(), seq.end(), u1) - seq.begin();
                std::rotate(seq.begin(), seq.begin() + pos, seq.end());
                Vertex nb1 = seq[1], nb2 = seq.back();
                Plan plan;
                plan.rule = "gstar_odd_cycle";
                std::vector<Edit> sA;
                for (Vertex t : {nb1, nb2})
                    if (f.parent(t) != p) sA.push_back(Edit::Favor(t, {f.parent(t)}));
                sA.push_back(Edit::Keep(u1));
                sA.push_back(Edit::Cut(nb1));
                sA.push_back(Edit::Cut(nb2));
                plan.sides.push_back(make_side(std::move(sA)));
                // with u1 cut the rest is an odd path of length >= 5
                std::vector<Vertex> path(seq.begin() + 1, seq.end());
                if (path.back() < path.front()) std::reverse(path.begin(), path.end());
                std::vector<Edit> sB1{Edit::Cut(u1)};
                std::set<Vertex> in_cov;
                for (size_t i = 0; i < path.size(); i += 2) {
                    sB1.push_back(Edit::Cut(path[i]));
                    in_cov.insert(path[i]);
                }
                for (Vertex v : path)
                    if (!in_cov.count(v)) sB1.push_back(Edit::Keep(v));
                plan.sides.push_back(make_side(std::move(sB1)));
                plan.sides.push_back(make_side({Edit::Cut(u1), Edit::Cut(path[1])}));
                return {PhaseAction::Kind::plan, std::move(plan)};
            }
        }
        return {};
    }

    // ---- request-closed clusters settled in place --------------------------------

    struct LocalStructure {
        bool is_quad = false;
        ComponentShape shape;
        SpecialQuadruple quad{-1, -1, -1, -1};
        std::vector<Vertex> members;
        std::vector<Vertex> importants;
        std::vector<VertexPair> reqs;
    };

    // When every request leaving T_w goes to one leaf sibling w', an optimal
    // cut never needs the edge above w: swapping it for w's sibling edge
    // serves the same requests. Special quadruples keep their own treatment.
    bool sibling_pair_contract(WorkingForest& f, const Ctx& ctx, int node_id)
    {
        std::map<Vertex, std::set<Vertex>> quad_members; // per parent
        for (Vertex w : f.component_vertices(ctx.comp_root)) {
            Vertex p = f.parent(w);
            if (p < 0 || f.childless(w)) continue;
            if (!quad_members.count(p)) {
                auto& qm = quad_members[p];
                for (const auto& q : detect_special_quadruples(f, p))
                    qm.insert({q.w, q.w_prime, q.u, q.v});
            }
            const std::set<Vertex>& in_quad = quad_members[p];
            if (in_quad.count(w)) continue;
            Vertex common = -1;
            bool ok = true;
            for (Vertex x : f.subtree_vertices(w)) {
                for (Vertex t : f.request_partners(x)) {
                    if (f.in_subtree(t, w)) continue;
                    if (common < 0) common = t;
                    if (t != common) ok = false;
                }
                if (!ok) break;
            }
            if (!ok || common < 0) continue;
            if (f.parent(common) != p || !f.childless(common) || in_quad.count(common))
                continue;
            if (f.contract_child(w, node_id) != EditStatus::ok)
                throw CaseAnalysisViolation("sibling pair contract hit a unit request");
            stats_.rules.bump("sibling_pair_contract");
            return true;
        }
        return false;
    }

    PhaseAction closed_cluster_phase(WorkingForest& f, const Ctx& ctx, int node_id,
                                     bool absorb = false)
    {
        for (Vertex p : ctx.zone_parents) {
            std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, p);
            LeafGraph g = build_gstar(f, p, quads);
            // star vertices isolated by pending far requests wait for the
            // frontier phase, and dirty components wait for their pending
            // zone mates; neither carries a group yet
            std::vector<ComponentShape> clean;
            for (ComponentShape& s : decompose_deg2(g))
                if (!(s.kind == ShapeKind::path && s.length() == 0) &&
                    shape_clean(f, p, s))
                    clean.push_back(std::move(s));
            LeafGraph g2;
            g2.owner = p;
            for (const ComponentShape& s : clean)
                for (Vertex v : s.seq) g2.nodes.push_back(v);
            std::sort(g2.nodes.begin(), g2.nodes.end());
            for (Vertex v : g2.nodes) g2.adj[v] = g.adj[v];
            if (!absorb)
                for (const GroupTag& t : classify_groups(g2, quads, f))
                    stats_.rules.bump(group_name(t.kind));

            std::vector<LocalStructure> structs;
            for (const ComponentShape& s : clean) {
                LocalStructure ls;
                ls.shape = s;
                ls.members = s.seq;
                std::set<Vertex> imp;
                for (Vertex v : s.seq)
                    if (f.parent(v) != p) imp.insert(f.parent(v));
                ls.importants.assign(imp.begin(), imp.end());
                if (s.kind == ShapeKind::path) {
                    for (size_t i = 0; i + 1 < s.seq.size(); ++i)
                        ls.reqs.push_back(norm_pair(s.seq[i], s.seq[i + 1]));
                } else {
                    for (size_t i = 0; i < s.seq.size(); ++i)
                        ls.reqs.push_back(norm_pair(s.seq[i], s.seq[(i + 1) % s.seq.size()]));
                }
                structs.push_back(std::move(ls));
            }
            for (const SpecialQuadruple& q : quads) {
                LocalStructure ls;
                ls.is_quad = true;
                ls.quad = q;
                ls.members = {q.w_prime, q.u, q.v};
                ls.importants = {q.w};
                ls.reqs = {norm_pair(q.u, q.v), norm_pair(q.u, q.w_prime),
                           norm_pair(q.v, q.w_prime), norm_pair(q.w, q.w_prime)};
                structs.push_back(std::move(ls));
            }
            if (structs.empty()) continue;

            std::map<Vertex, int> imp_owner;
            std::vector<int> dsu(structs.size());
            for (size_t i = 0; i < structs.size(); ++i) dsu[i] = (int)i;
            std::function<int(int)> findc = [&](int x) {
                while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
                return x;
            };
            for (size_t i = 0; i < structs.size(); ++i)
                for (Vertex ip : structs[i].importants) {
                    auto it = imp_owner.find(ip);
                    if (it == imp_owner.end())
                        imp_owner[ip] = (int)i;
                    else
                        dsu[findc((int)i)] = findc(it->second);
                }
            std::map<int, std::vector<int>> clusters;
            for (size_t i = 0; i < structs.size(); ++i)
                clusters[findc((int)i)].push_back((int)i);

            for (auto& [root, idxs] : clusters) {
                std::set<Vertex> members, imps;
                std::set<VertexPair> reqs;
                for (int i : idxs) {
                    members.insert(structs[i].members.begin(), structs[i].members.end());
                    imps.insert(structs[i].importants.begin(), structs[i].importants.end());
                    reqs.insert(structs[i].reqs.begin(), structs[i].reqs.end());
                }
                std::set<Vertex> ext_members, ext_imps;
                for (Vertex m : members)
                    for (Vertex t : f.request_partners(m))
                        if (!reqs.count(norm_pair(m, t))) ext_members.insert(m);
                for (Vertex ip : imps)
                    for (Vertex t : f.request_partners(ip))
                        if (!reqs.count(norm_pair(ip, t))) ext_imps.insert(ip);
                bool closed = ext_members.empty() && ext_imps.empty();
                if (!absorb && !closed) continue;
                if (absorb && closed) continue; // the closed pass already ran
                if (imps.size() > 20)
                    throw CaseAnalysisViolation("cluster with too many important parents");

                std::vector<Vertex> impv(imps.begin(), imps.end());
                auto imp_bit = [&](Vertex v, unsigned bits) -> unsigned {
                    for (size_t i = 0; i < impv.size(); ++i)
                        if (impv[i] == v) return (bits >> i) & 1u;
                    return 0u;
                };
                // the cluster optimum, optionally with the externally linked
                // members and parents forced into the cut
                auto settle = [&](bool force_ext)
                    -> std::optional<std::pair<long long, std::vector<Vertex>>> {
                    unsigned need_bits = 0;
                    if (force_ext)
                        for (size_t i = 0; i < impv.size(); ++i)
                            if (ext_imps.count(impv[i])) need_bits |= 1u << i;
                    long long best_cost = -1;
                    std::vector<Vertex> best_cuts;
                    for (unsigned bits = 0; bits < (1u << impv.size()); ++bits) {
                        if ((bits & need_bits) != need_bits) continue;
                        long long cost = __builtin_popcount(bits);
                        std::vector<Vertex> cuts;
                        for (int i : idxs) {
                            const LocalStructure& ls = structs[i];
                            bool crossed = ls.is_quad;
                            for (auto [a, b] : ls.reqs)
                                if (f.parent(a) != f.parent(b)) crossed = true;
                            bool has_forced = false;
                            for (Vertex v : ls.members)
                                if (ext_members.count(v)) has_forced = true;
                            has_forced = has_forced && force_ext;
                            if (!crossed && !has_forced) {
                                LeafGraph sub;
                                sub.owner = p;
                                sub.nodes = ls.members;
                                std::sort(sub.nodes.begin(), sub.nodes.end());
                                for (Vertex v : sub.nodes) sub.adj[v];
                                for (auto [a, b] : ls.reqs) {
                                    sub.adj[a].push_back(b);
                                    sub.adj[b].push_back(a);
                                }
                                VcResult vc = min_vc_deg2(sub);
                                cost += vc.tau;
                                cuts.insert(cuts.end(), vc.cover.begin(), vc.cover.end());
                                continue;
                            }
                            if (ls.members.size() > 16) {
                                cost = -1;
                                break;
                            }
                            int m = (int)ls.members.size();
                            int best_local = -1;
                            unsigned best_sub = 0;
                            auto branch_root = [&](Vertex v) {
                                return f.parent(v) == p ? v : f.parent(v);
                            };
                            for (unsigned sub = 0; sub < (1u << m); ++sub) {
                                auto cut_of = [&](Vertex v) -> unsigned {
                                    for (int j = 0; j < m; ++j)
                                        if (ls.members[j] == v) return (sub >> j) & 1u;
                                    return 0u; // the quadruple's w, its bit decides
                                };
                                bool ok = true;
                                // an outside request of a member rides along
                                // when the member or its parent edge is cut
                                if (force_ext)
                                    for (int j = 0; j < m && ok; ++j) {
                                        Vertex v = ls.members[j];
                                        if (!ext_members.count(v)) continue;
                                        if ((sub >> j) & 1u) continue;
                                        if (f.parent(v) != p && imp_bit(f.parent(v), bits))
                                            continue;
                                        ok = false;
                                    }
                                for (auto [a, b] : ls.reqs) {
                                    if (!ok) break;
                                    if (cut_of(a) || cut_of(b)) continue;
                                    Vertex ba = branch_root(a), bb = branch_root(b);
                                    if (ba != bb && (imp_bit(ba, bits) || imp_bit(bb, bits)))
                                        continue;
                                    ok = false;
                                    break;
                                }
                                if (!ok) continue;
                                int c = __builtin_popcount(sub);
                                if (best_local < 0 || c < best_local) {
                                    best_local = c;
                                    best_sub = sub;
                                }
                            }
                            if (best_local < 0) {
                                cost = -1;
                                break;
                            }
                            cost += best_local;
                            for (int j = 0; j < m; ++j)
                                if ((best_sub >> j) & 1u) cuts.push_back(ls.members[j]);
                        }
                        if (cost < 0) continue;
                        if (best_cost < 0 || cost < best_cost) {
                            best_cost = cost;
                            best_cuts = cuts;
                            for (size_t i = 0; i < impv.size(); ++i)
                                if ((bits >> i) & 1u) best_cuts.push_back(impv[i]);
                        }
                    }
                    if (best_cost < 0) return std::nullopt;
                    std::sort(best_cuts.begin(), best_cuts.end());
                    return std::make_pair(best_cost, best_cuts);
                };

                auto plain = settle(false);
                if (!plain)
                    throw CaseAnalysisViolation("cluster admits no local cut");
                if (absorb) {
                    auto forced = settle(true);
                    if (!forced || forced->first != plain->first) continue;
                    stats_.rules.bump("cluster_absorb");
                    if (!forced_cuts(f, forced->second, node_id))
                        return {PhaseAction::Kind::infeasible, {}};
                    return {PhaseAction::Kind::applied, {}};
                }
                stats_.rules.bump("closed_cluster");
                if (!forced_cuts(f, plain->second, node_id))
                    return {PhaseAction::Kind::infeasible, {}};
                return {PhaseAction::Kind::applied, {}};
            }
        }
        return {};
    }

    // ---- requests spanning distinct frontier subtrees -----------------------------

    struct ItCandidate {
        Vertex u, x, a; // endpoints and their meeting vertex
    };

    std::vector<ItCandidate> intertree_candidates(const WorkingForest& f,
                                                  const Ctx& ctx) const
    {
        std::vector<ItCandidate> out;
        auto in_universe = [&](Vertex v, Vertex p) {
            if (!f.childless(v)) return false;
            Vertex q = f.parent(v);
            return q == p || (q >= 0 && f.parent(q) == p);
        };
        for (auto [x, y] : f.requests()) {
            if (f.component_root(x) != ctx.comp_root) continue;
            // sibling pairs belong to their own request graph
            if (f.parent(x) == f.parent(y)) continue;
            // pairs inside a zone under work are the star-graph phase's job
            bool zone_pair = false;
            for (Vertex p : ctx.zone_parents)
                if (in_universe(x, p) && in_universe(y, p)) zone_pair = true;
            if (zone_pair) continue;
            // a cross request of an internal vertex waits for its own cases;
            // requests into the vertex's own subtree cannot wait (the subtree
            // resolves first only with their help)
            if (!f.childless(x) && f.parent(x) >= 0 &&
                f.in_subtree(y, f.parent(x)) && !f.in_subtree(y, x))
                continue;
            if (!f.childless(y) && f.parent(y) >= 0 &&
                f.in_subtree(x, f.parent(y)) && !f.in_subtree(x, y))
                continue;
            out.push_back({x, y, f.lca(x, y)});
        }
        std::sort(out.begin(), out.end(), [&](const ItCandidate& l, const ItCandidate& r) {
            int dl = ctx.depth[l.a], dr = ctx.depth[r.a];
            if (dl != dr) return dl > dr;
            if (l.u != r.u) return l.u < r.u;
            return l.x < r.x;
        });
        return out;
    }

    std::optional<Plan> intertree_phase(const WorkingForest& f, const Ctx& ctx) const
    {
        std::vector<ItCandidate> cands = intertree_candidates(f, ctx);
        using Fn = std::optional<Plan> (Solver::*)(const WorkingForest&, Vertex, Vertex,
                                                   Vertex) const;
        static const Fn steps[] = {
            &Solver::it_case_important,
            &Solver::it_case_deg2,
            &Solver::it_case_path_end,
            &Solver::it_case_gp1,
        };
        for (Fn step : steps)
            for (const ItCandidate& c : cands)
                for (auto [u, x] : {std::pair{c.u, c.x}, std::pair{c.x, c.u}})
                    if (auto p = (this->*step)(f, u, x, c.a)) return p;
        return std::nullopt;
    }

    // structure of a non-important vertex inside its own two-level zone
    struct ZoneInfo {
        Vertex zone = -1;
        bool in_quad = false;
        SpecialQuadruple quad{-1, -1, -1, -1};
        bool in_star = false;
        ComponentShape shape;
        int degree = 0;
    };

    std::optional<ZoneInfo> zone_info(const WorkingForest& f, Vertex u) const
    {
        if (!f.childless(u)) return std::nullopt;
        Vertex q = f.parent(u);
        if (q < 0) return std::nullopt;
        ZoneInfo z;
        z.zone = f.important(q) ? f.parent(q) : q;
        if (z.zone < 0) return std::nullopt;
        std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, z.zone);
        for (const SpecialQuadruple& sq : quads)
            if (sq.w_prime == u || sq.u == u || sq.v == u) {
                z.in_quad = true;
                z.quad = sq;
                return z;
            }
        LeafGraph g = build_gstar(f, z.zone, quads);
        if (!g.has(u) || g.max_degree() > 2) return std::nullopt;
        for (const ComponentShape& s : decompose_deg2(g))
            if (s.contains(u)) {
                z.in_star = true;
                z.shape = s;
                z.degree = g.degree(u);
                return z;
            }
        return std::nullopt;
    }

    // The chain conversion is only exhaustive when the committed edges carry
    // nothing but through-traffic: a request ending at a chain vertex makes
    // those edges valuable on their own and the commitment loses optima.
    bool chain_clear(const WorkingForest& f, Vertex v, Vertex a) const
    {
        for (Vertex c : chain_up(f, v, a))
            if (!f.request_partners(c).empty()) return false;
        return true;
    }

    // an important vertex with a request leaving its grandparent's subtree
    std::optional<Plan> it_case_important(const WorkingForest& f, Vertex u, Vertex x,
                                          Vertex a) const
    {
        if (!f.important(u)) return std::nullopt;
        if (f.parent(u) >= 0 && f.in_subtree(x, f.parent(u))) return std::nullopt;
        if (f.is_root(x)) return std::nullopt; // the branch cuts x
        if (!chain_clear(f, u, a) || !chain_clear(f, x, a)) return std::nullopt;
        LeafGraph g = build_gu(f, u);
        if (g.max_degree() > 2) return std::nullopt;
        auto crossed = [&](Vertex c) {
            for (Vertex t : f.request_partners(c))
                if (!f.in_subtree(t, u)) return true;
            return false;
        };
        for (const ComponentShape& s : decompose_deg2(g)) {
            if (s.kind != ShapeKind::path || s.length() != 1) continue;
            Vertex c1 = s.seq[0], c2 = s.seq[1];
            if (!crossed(c1) || !crossed(c2)) continue;
            for (auto [z, y] : {std::pair{std::min(c1, c2), std::max(c1, c2)},
                                std::pair{std::max(c1, c2), std::min(c1, c2)}}) {
                Vertex zt = -1;
                for (Vertex t : f.request_partners(z)) {
                    if (f.in_subtree(t, u) || t == x) continue;
                    Vertex l = f.lca(z, t);
                    if (l >= 0 && f.in_subtree(l, a) && (zt < 0 || t < zt)) zt = t;
                }
                if (zt < 0) continue;
                Plan plan;
                plan.rule = "it_important";
                std::vector<Edit> s1;
                std::vector<Vertex> zchain{u};
                for (Vertex c : chain_up(f, u, a)) zchain.push_back(c);
                s1.push_back(Edit::Favor(z, zchain));
                if (f.parent(zt) != a) s1.push_back(Edit::Favor(zt, chain_up(f, zt, a)));
                if (f.parent(x) != a) s1.push_back(Edit::Favor(x, chain_up(f, x, a)));
                s1.push_back(Edit::Keep(z));
                s1.push_back(Edit::Cut(y));
                s1.push_back(Edit::Cut(zt));
                s1.push_back(Edit::Cut(x));
                plan.sides.push_back(make_side(std::move(s1)));
                plan.sides.push_back(make_side({Edit::Cut(z)}));
                return plan;
            }
        }
        return std::nullopt;
    }

    // a degree-two star-graph vertex (or quadruple member) with an outside request
    std::optional<Plan> it_case_deg2(const WorkingForest& f, Vertex u, Vertex x,
                                     Vertex a) const
    {
        auto zi = zone_info(f, u);
        if (!zi) return std::nullopt;
        Vertex p = zi->zone;
        if (f.in_subtree(x, p)) return std::nullopt; // zone-internal pair
        if (f.is_root(x)) return std::nullopt;       // the branch cuts x
        if (!chain_clear(f, u, a) || !chain_clear(f, x, a)) return std::nullopt;
        std::vector<Edit> two;
        if (zi->in_quad) {
            const SpecialQuadruple& q = zi->quad;
            if (u == q.w_prime) {
                two = {Edit::Cut(q.w), Edit::Cut(std::min(q.u, q.v))};
            } else {
                Vertex sib = u == q.u ? q.v : q.u;
                two = {Edit::Cut(sib), Edit::Cut(q.w_prime)};
            }
        } else if (zi->degree == 2) {
            const ComponentShape& s = zi->shape;
            std::vector<Vertex> nbs;
            for (size_t i = 0; i < s.seq.size(); ++i)
                if (s.seq[i] == u) {
                    if (s.kind == ShapeKind::cycle) {
                        nbs = {s.seq[(i + 1) % s.seq.size()],
                               s.seq[(i + s.seq.size() - 1) % s.seq.size()]};
                    } else {
                        if (i > 0) nbs.push_back(s.seq[i - 1]);
                        if (i + 1 < s.seq.size()) nbs.push_back(s.seq[i + 1]);
                    }
                }
            if (nbs.size() != 2) return std::nullopt;
            bool cycle3 = s.kind == ShapeKind::cycle && s.length() == 3;
            if (cycle3 && f.parent(u) == p && f.parent(nbs[0]) == f.parent(nbs[1]) &&
                f.parent(nbs[0]) != p) {
                two = {Edit::Cut(f.parent(nbs[0])), Edit::Cut(std::min(nbs[0], nbs[1]))};
            } else {
                for (Vertex nb : nbs)
                    if (f.parent(nb) != p) two.push_back(Edit::Favor(nb, {f.parent(nb)}));
                two.push_back(Edit::Cut(std::min(nbs[0], nbs[1])));
                two.push_back(Edit::Cut(std::max(nbs[0], nbs[1])));
            }
        } else {
            return std::nullopt;
        }
        Plan plan;
        plan.rule = "it_deg2";
        plan.sides.push_back(make_side({Edit::Cut(u)}));
        std::vector<Edit> s2;
        s2.push_back(Edit::Favor(u, chain_up(f, u, a)));
        if (f.parent(x) != a) s2.push_back(Edit::Favor(x, chain_up(f, x, a)));
        s2.push_back(Edit::Keep(u));
        for (const Edit& e : two) s2.push_back(e);
        s2.push_back(Edit::Cut(x));
        plan.sides.push_back(make_side(std::move(s2)));
        return plan;
    }

    // an endpoint of a length-3 star path with an outside request
    std::optional<Plan> it_case_path_end(const WorkingForest& f, Vertex u, Vertex x,
                                         Vertex a) const
    {
        auto zi = zone_info(f, u);
        if (!zi || zi->in_quad || zi->degree != 1) return std::nullopt;
        if (f.in_subtree(x, zi->zone)) return std::nullopt; // zone-internal pair
        if (f.is_root(x)) return std::nullopt;               // the branch cuts x
        if (!chain_clear(f, u, a) || !chain_clear(f, x, a)) return std::nullopt;
        const ComponentShape& s = zi->shape;
        if (s.kind != ShapeKind::path || s.length() != 3) return std::nullopt;
        std::vector<Vertex> seq = s.seq;
        if (seq.back() == u) std::reverse(seq.begin(), seq.end());
        if (seq.front() != u) return std::nullopt;
        // the pinned-cover exchange needs the path to own all its requests
        std::set<Vertex> on_path(seq.begin(), seq.end());
        for (Vertex v : seq)
            for (Vertex t : f.request_partners(v))
                if (!on_path.count(t) && !(v == u && t == x)) return std::nullopt;
        Plan plan;
        plan.rule = "it_path_end";
        plan.sides.push_back(make_side({Edit::Cut(u), Edit::Cut(seq[2])}));
        std::vector<Edit> s2;
        s2.push_back(Edit::Favor(u, chain_up(f, u, a)));
        if (f.parent(x) != a) s2.push_back(Edit::Favor(x, chain_up(f, x, a)));
        s2.push_back(Edit::Keep(u));
        s2.push_back(Edit::Cut(seq[1]));
        s2.push_back(Edit::Cut(x));
        plan.sides.push_back(make_side(std::move(s2)));
        return plan;
    }

    // an endpoint of an in-family isolated edge (children of one important
    // vertex) with an outside request
    std::optional<Plan> it_case_gp1(const WorkingForest& f, Vertex u, Vertex x,
                                    Vertex a) const
    {
        auto zi = zone_info(f, u);
        if (!zi || zi->in_quad || zi->degree != 1) return std::nullopt;
        if (f.in_subtree(x, zi->zone)) return std::nullopt; // zone-internal pair
        if (f.is_root(x)) return std::nullopt;               // the branch cuts x
        if (!chain_clear(f, u, a) || !chain_clear(f, x, a)) return std::nullopt;
        const ComponentShape& s = zi->shape;
        if (s.kind != ShapeKind::path || s.length() != 1) return std::nullopt;
        Vertex v = s.seq[0] == u ? s.seq[1] : s.seq[0];
        Vertex w_loc = f.parent(u);
        if (w_loc != f.parent(v) || !f.important(w_loc)) return std::nullopt;
        Vertex p = zi->zone;

        // the sibling edge both of whose endpoints have requests leaving T_{w_loc}
        LeafGraph g = build_gu(f, w_loc);
        auto crossed = [&](Vertex c) {
            for (Vertex t : f.request_partners(c))
                if (!f.in_subtree(t, w_loc)) return true;
            return false;
        };
        Vertex z = -1, y = -1;
        for (const ComponentShape& sg : decompose_deg2(g)) {
            if (sg.kind != ShapeKind::path || sg.length() != 1) continue;
            Vertex c1 = sg.seq[0], c2 = sg.seq[1];
            if ((c1 == u && c2 == v) || (c1 == v && c2 == u)) continue;
            if (crossed(c1) && crossed(c2)) {
                z = std::min(c1, c2);
                y = std::max(c1, c2);
                break;
            }
        }

        Plan plan;
        plan.rule = "it_gp1";
        plan.sides.push_back(make_side({Edit::Cut(u), Edit::Keep(v)}));

        std::vector<Edit> base;
        base.push_back(Edit::Favor(u, chain_up(f, u, a)));
        if (f.parent(x) != a) base.push_back(Edit::Favor(x, chain_up(f, x, a)));
        base.push_back(Edit::Keep(u));
        base.push_back(Edit::Cut(v));
        base.push_back(Edit::Cut(x));

        // Without a doubly-crossed sibling edge the reduction rules leave only
        // one possibility: w_loc itself has a request to one leaf sibling w'.
        // Keeping u keeps the whole chain, so that sibling must be cut too.
        auto sibling_extra = [&]() -> std::optional<Edit> {
            std::vector<Vertex> wt = targets_within(f, w_loc, p, w_loc);
            if (wt.size() != 1) return std::nullopt;
            Vertex wp = wt[0];
            if (f.parent(wp) != p || !f.childless(wp)) return std::nullopt;
            return Edit::Cut(wp);
        };
        if (z < 0) {
            auto extra = sibling_extra();
            if (!extra) return std::nullopt;
            base.push_back(*extra);
            plan.sides.push_back(make_side(std::move(base)));
            return plan;
        }
        // locate the structure of (z, y) in the star graph of the zone
        auto zzi = zone_info(f, z);
        if (!zzi || zzi->in_quad) return std::nullopt;
        const ComponentShape& zs = zzi->shape;
        auto others_ok = [&](std::initializer_list<Vertex> vs,
                             std::initializer_list<Vertex> allowed) {
            for (Vertex c : vs)
                for (Vertex t : f.request_partners(c))
                    if (std::find(allowed.begin(), allowed.end(), t) == allowed.end())
                        return false;
            return true;
        };
        if (zs.kind == ShapeKind::cycle && zs.length() == 3) {
            Vertex c = -1;
            for (Vertex t : zs.seq)
                if (t != z && t != y) c = t;
            if (others_ok({z, y}, {z, y, c})) {
                std::vector<Edit> s2 = base;
                s2.push_back(Edit::Cut(c));
                plan.sides.push_back(make_side(std::move(s2)));
                return plan;
            }
        } else if (zs.kind == ShapeKind::path && zs.length() == 3) {
            std::vector<Vertex> seq = zs.seq;
            if (seq[1] != z && seq[1] != y) return std::nullopt;
            if (seq[1] == y) std::reverse(seq.begin(), seq.end());
            // seq = (s0, z, y, t)
            std::vector<Edit> s2a = base, s2b = base;
            s2a.push_back(Edit::Cut(seq[0]));
            s2a.push_back(Edit::Cut(y));
            s2b.push_back(Edit::Cut(z));
            s2b.push_back(Edit::Cut(seq[3]));
            plan.sides.push_back(make_side(std::move(s2a)));
            plan.sides.push_back(make_side(std::move(s2b)));
            return plan;
        } else if (zs.kind == ShapeKind::cycle && zs.length() == 5) {
            std::vector<Vertex> seq = zs.seq;
            size_t pos = std::find(seq.begin(), seq.end(), z) - seq.begin();
            std::rotate(seq.begin(), seq.begin() + pos, seq.end());
            if (seq[1] != y) std::reverse(seq.begin() + 1, seq.end());
            if (seq[1] != y) return std::nullopt;
            // seq = (z, y, pp, qq, ss) with ss adjacent to z
            Vertex pp = seq[2], ss = seq[4];
            std::vector<Edit> s2a = base, s2b = base;
            s2a.push_back(Edit::Cut(z));
            s2a.push_back(Edit::Cut(pp));
            s2b.push_back(Edit::Cut(y));
            s2b.push_back(Edit::Cut(ss));
            plan.sides.push_back(make_side(std::move(s2a)));
            plan.sides.push_back(make_side(std::move(s2b)));
            return plan;
        }
        return std::nullopt; // unexpected sibling structure, leave it alone
    }

    // Pending pair: an important vertex w still carries an in-zone request to
    // a leaf sibling w' while off-zone requests keep every named case away.
    // One of the two edges above w and w' must go; keeping w' commits w plus
    // one minimum-cover member. The second side only realizes two cuts, so
    // this stays a last resort.
    std::optional<Plan> pending_sibling_branch(const WorkingForest& f,
                                               const Ctx& ctx) const
    {
        for (Vertex p : ctx.zone_parents) {
            std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, p);
            std::set<Vertex> in_quad;
            for (const auto& q : quads) in_quad.insert({q.w, q.w_prime, q.u, q.v});
            for (Vertex w : f.children(p)) {
                if (f.childless(w) || in_quad.count(w)) continue;
                for (Vertex wp : targets_within(f, w, p, w)) {
                    if (f.parent(wp) != p || !f.childless(wp)) continue;
                    LeafGraph g = build_gu(f, w);
                    if (g.max_degree() > 2) continue;
                    VcResult vc = min_vc_deg2(g);
                    if (vc.cover.empty()) continue;
                    Plan plan;
                    plan.rule = "pending_sibling_branch";
                    plan.sides.push_back(make_side({Edit::Cut(wp)}));
                    plan.sides.push_back(make_side(
                        {Edit::Keep(wp), Edit::Cut(w), Edit::Cut(vc.cover.front())}));
                    return plan;
                }
            }
        }
        return std::nullopt;
    }

    // A request sitting on an internal family root w1 escapes every named
    // case (w1 is neither important nor a star-graph vertex). Either the edge
    // above w1 is cut, which pins the interior to an internal minimum cut,
    // or it is kept and every target adjacent to the parent becomes a unit
    // request. Emitted only when the two sides stay within the branching
    // budget.
    // Plays the edits on a scratch copy; every request-carrying component the
    // edits detach from `anchor` is then settled on its own, and that forced
    // optimum is appended to the edit list. False when the edits do not even
    // apply (exhausted budget or a contracted unit request).
    bool extend_with_detached(const WorkingForest& f, Vertex anchor,
                              std::vector<Edit>& edits) const
    {
        WorkingForest copy = f;
        for (const Edit& e : edits) {
            if (e.kind == Edit::Kind::favor) continue;
            Vertex c = copy.find(e.v);
            if (!copy.live(c) || copy.parent(c) < 0) return false;
            EditStatus st = e.kind == Edit::Kind::cut ? copy.cut_child(c)
                                                      : copy.contract_child(c);
            if (st != EditStatus::ok) return false;
        }
        Vertex main_root = copy.component_root(copy.find(anchor));
        for (Vertex r : copy.roots()) {
            if (r == main_root) continue;
            std::vector<Vertex> comp = copy.component_vertices(r);
            if (comp.size() > 40) continue;
            std::map<Vertex, int> id;
            for (Vertex v : comp) id[v] = (int)id.size();
            std::vector<VertexPair> reqs;
            for (auto [a, b] : copy.requests())
                if (id.count(a) && id.count(b)) reqs.push_back(norm_pair(id[a], id[b]));
            if (reqs.empty()) continue;
            std::vector<Edge> edges;
            std::vector<Vertex> child_of_edge;
            for (Vertex v : comp)
                if (copy.parent(v) >= 0) {
                    edges.push_back({id[v], id[copy.parent(v)], 1});
                    child_of_edge.push_back(v);
                }
            Instance sub = build_instance((int)comp.size(), edges, reqs);
            SolveResult inner = solve_min(sub);
            for (EdgeId e : *inner.cut) edits.push_back(Edit::Cut(child_of_edge[e]));
        }
        return true;
    }

    std::optional<Plan> family_root_branch(const WorkingForest& f, const Ctx& ctx) const
    {
        std::vector<Vertex> order = f.component_vertices(ctx.comp_root);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (ctx.depth[a] != ctx.depth[b]) return ctx.depth[a] > ctx.depth[b];
            return a < b;
        });
        double rho = search_tree_rho();
        for (Vertex w1 : order) {
            Vertex p = f.parent(w1);
            if (p < 0 || f.childless(w1)) continue;
            // keeping the edge above w1 turns these requests into units
            std::set<Vertex> unit_cuts;
            for (Vertex t : f.request_partners(w1)) {
                if (f.in_subtree(t, w1)) continue;
                if (f.parent(t) == p) unit_cuts.insert(t);
                if (t == f.parent(p)) unit_cuts.insert(p);
            }
            for (Vertex c : f.children(w1))
                if (f.request_between(p, c)) unit_cuts.insert(c);
            if (unit_cuts.empty()) continue;
            std::vector<Edit> s2{Edit::Keep(w1)};
            for (Vertex c : unit_cuts) s2.push_back(Edit::Cut(c));
            std::vector<Edit> s1{Edit::Cut(w1)};
            if (!extend_with_detached(f, p, s1)) continue;
            if (!extend_with_detached(f, p, s2)) continue;
            Side side1 = make_side(std::move(s1));
            Side side2 = make_side(std::move(s2));
            if (std::pow(rho, -(double)side1.declared) +
                    std::pow(rho, -(double)side2.declared) >
                1.0 + 1e-9)
                continue; // the recurrence would not close
            Plan plan;
            plan.rule = "family_root_branch";
            plan.sides.push_back(std::move(side1));
            plan.sides.push_back(std::move(side2));
            return plan;
        }
        return std::nullopt;
    }

    // A childless vertex whose single request targets a non-adjacent vertex
    // never needs its own edge cut: a minimum cut using that edge serves only
    // this request and can swap the edge for the next one on the request
    // path. Contracting it is safe, so it runs as a last resort to clear
    // states none of the named phases claims.
    bool lonely_leaf_contract(WorkingForest& f, const Ctx& ctx, int node_id)
    {
        for (Vertex x : f.live_vertices()) {
            if (f.component_root(x) != ctx.comp_root) continue;
            if (!f.childless(x) || f.parent(x) < 0) continue;
            std::vector<Vertex> partners = f.request_partners(x);
            if (partners.size() != 1 || partners[0] == f.parent(x)) continue;
            if (f.contract_child(x, node_id) != EditStatus::ok)
                throw CaseAnalysisViolation("lonely leaf contraction hit a unit request");
            stats_.rules.bump("lonely_leaf_contract");
            return true;
        }
        return false;
    }

    // Local cover split on a clean star-graph structure: a degree-two member
    // is either cut or both of its neighbors are (no minimum cover avoids all
    // three). Needs no chain commitments, so it clears tangles the chain
    // calculus refuses; the second side only realizes two cuts.
    std::optional<Plan> structure_split_branch(const WorkingForest& f,
                                               const Ctx& ctx) const
    {
        for (Vertex p : ctx.zone_parents) {
            std::vector<SpecialQuadruple> quads = detect_special_quadruples(f, p);
            LeafGraph g = build_gstar(f, p, quads);
            if (g.max_degree() > 2) continue;
            for (const ComponentShape& s : decompose_deg2(g)) {
                if (s.length() == 0 || !shape_clean(f, p, s)) continue;
                for (Vertex u : s.seq) {
                    if (g.degree(u) != 2) continue;
                    Vertex n1 = g.neighbors(u)[0], n2 = g.neighbors(u)[1];
                    if (n1 > n2) std::swap(n1, n2);
                    Plan plan;
                    plan.rule = "structure_split";
                    plan.sides.push_back(make_side({Edit::Cut(u)}));
                    plan.sides.push_back(make_side({Edit::Cut(n1), Edit::Cut(n2)}));
                    return plan;
                }
            }
            for (const SpecialQuadruple& q : quads) {
                Plan plan;
                plan.rule = "structure_split";
                plan.sides.push_back(make_side({Edit::Cut(q.u)}));
                plan.sides.push_back(make_side({Edit::Cut(q.v), Edit::Cut(q.w_prime)}));
                return plan;
            }
        }
        return std::nullopt;
    }

    // ---- the sound generic branch, flagged when reached ---------------------------

    Plan fallback_plan(const WorkingForest& f) const
    {
        // branch over every edge on the path of a shortest live request
        Vertex bx = -1, by = -1, bl = -1;
        int best = -1;
        auto path_len = [&](Vertex v, Vertex anc) {
            int d = 0;
            for (; v != anc; v = f.parent(v)) ++d;
            return d;
        };
        for (auto [x, y] : f.requests()) {
            Vertex l = f.lca(x, y);
            int len = path_len(x, l) + path_len(y, l);
            if (best < 0 || len < best) {
                best = len;
                bx = x;
                by = y;
                bl = l;
            }
        }
        Plan plan;
        plan.rule = "fallback_path_branch";
        for (Vertex v = bx; v != bl; v = f.parent(v))
            plan.sides.push_back(make_side({Edit::Cut(v)}));
        for (Vertex v = by; v != bl; v = f.parent(v))
            plan.sides.push_back(make_side({Edit::Cut(v)}));
        return plan;
    }

    // ---- the node loop --------------------------------------------------------------

    std::optional<CutList> solve_node(WorkingForest f, int depth)
    {
        ++stats_.nodes;
        int node_id = (int)stats_.nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth);

        std::optional<Plan> plan;
        for (;;) {
            if (reduce_to_fixpoint(f, stats_.rules) == ReduceOutcome::infeasible) {
                ++stats_.leaves;
                return std::nullopt;
            }
            if (f.requests().empty()) {
                ++stats_.leaves;
                return f.committed_cut();
            }
            auto ctx = make_ctx(f);
            if (!ctx)
                throw CaseAnalysisViolation("live requests but no important vertex");

            plan = aux_branch(f, *ctx);
            if (plan) break;

            if (f.is_root(ctx->w_sel)) {
                if (!star_solve(f, *ctx, node_id)) {
                    ++stats_.leaves;
                    return std::nullopt;
                }
                continue;
            }

            plan = cases_phase(f, *ctx);
            if (plan) break;

            PhaseAction act = gstar_phase(f, *ctx, node_id);
            if (act.kind == PhaseAction::Kind::infeasible) {
                ++stats_.leaves;
                return std::nullopt;
            }
            if (act.kind == PhaseAction::Kind::applied) continue;
            if (act.kind == PhaseAction::Kind::plan) {
                plan = std::move(act.plan);
                break;
            }

            act = closed_cluster_phase(f, *ctx, node_id);
            if (act.kind == PhaseAction::Kind::infeasible) {
                ++stats_.leaves;
                return std::nullopt;
            }
            if (act.kind == PhaseAction::Kind::applied) continue;

            plan = intertree_phase(f, *ctx);
            if (plan) break;

            if (lonely_leaf_contract(f, *ctx, node_id)) continue;

            if (sibling_pair_contract(f, *ctx, node_id)) continue;

            act = closed_cluster_phase(f, *ctx, node_id, true);
            if (act.kind == PhaseAction::Kind::infeasible) {
                ++stats_.leaves;
                return std::nullopt;
            }
            if (act.kind == PhaseAction::Kind::applied) continue;

            plan = family_root_branch(f, *ctx);
            if (plan) break;

            plan = pending_sibling_branch(f, *ctx);
            if (plan) break;

            plan = structure_split_branch(f, *ctx);
            if (plan) break;

            ++stats_.fallback_branches;
            if (getenv("TCT_DEBUG_FALLBACK")) {
                auto dd = f.depths();
                fprintf(stderr, "--- fallback state (budget %lld)\n", f.budget());
                for (Vertex v : f.live_vertices())
                    fprintf(stderr, "v%d parent=%d depth=%d%s%s\n", v, f.parent(v),
                            dd[v], f.important(v) ? " IMP" : "",
                            f.childless(v) ? " leaf" : "");
                for (auto [ra, rb] : f.requests())
                    fprintf(stderr, "req (%d,%d)\n", ra, rb);
            }
            plan = fallback_plan(f);
            break;
        }

        if (plan->rule != "fallback_path_branch" &&
            plan->rule != "pending_sibling_branch" && plan->rule != "structure_split")
            check_plan(*plan);
        stats_.rules.bump(plan->rule);
        if (getenv("TCT_DEBUG_PLAN")) {
            auto dd = f.depths();
            fprintf(stderr, "--- plan %s (budget %lld)\n", plan->rule.c_str(),
                    f.budget());
            for (Vertex v : f.live_vertices())
                fprintf(stderr, "v%d parent=%d depth=%d%s\n", v, f.parent(v), dd[v],
                        f.important(v) ? " IMP" : "");
            for (auto [ra, rb] : f.requests())
                fprintf(stderr, "req (%d,%d)\n", ra, rb);
            for (const Side& sd : plan->sides) {
                fprintf(stderr, "side declared %d:", sd.declared);
                for (const Edit& e : sd.edits)
                    fprintf(stderr, " %s%d",
                            e.kind == Edit::Kind::cut    ? "cut"
                            : e.kind == Edit::Kind::keep ? "keep"
                                                         : "favor",
                            e.v);
                fprintf(stderr, "\n");
            }
        }

        bool any_child = false;
        for (const Side& side : plan->sides) {
            if (side.declared > f.budget()) continue; // provably infeasible side
            WorkingForest child = f;
            if (apply_side(child, side, node_id) == ApplyOutcome::pruned) {
                ++stats_.nodes;
                ++stats_.leaves;
                any_child = true;
                continue;
            }
            any_child = true;
            if (auto res = solve_node(std::move(child), depth + 1)) return res;
        }
        if (!any_child) ++stats_.leaves;
        return std::nullopt;
    }
};

} // namespace

SolveResult solve_decision(const Instance& inst, int k)
{
    Solver s(inst, k);
    return s.run();
}

SolveResult solve_min(const Instance& inst)
{
    for (int k = 0; k <= (int)inst.edges.size(); ++k) {
        SolveResult r = solve_decision(inst, k);
        if (r.cut) return r;
    }
    // removing every edge separates everything, so this is unreachable
    throw std::logic_error("no cut found at k = number of edges");
}

} // namespace tct

#include "tct/reduce.hpp"

#include <algorithm>

namespace tct {

std::vector<Vertex> targets_within(const WorkingForest& f, Vertex v, Vertex p, Vertex w)
{
    std::vector<Vertex> out;
    for (Vertex t : f.request_partners(v))
        if (f.in_subtree(t, p) && (w < 0 || !f.in_subtree(t, w))) out.push_back(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexPair> cross_requests(const WorkingForest& f, Vertex w)
{
    std::vector<VertexPair> out;
    Vertex p = f.parent(w);
    if (p < 0) return out;
    for (auto [a, b] : f.requests()) {
        bool ina = f.in_subtree(a, w), inb = f.in_subtree(b, w);
        if (ina == inb) continue;
        Vertex outside = ina ? b : a;
        if (f.in_subtree(outside, p)) out.push_back({a, b});
    }
    return out;
}

ReduceOutcome rule_useless_edge(WorkingForest& f, RuleCounters& rc)
{
    // An edge is useless iff no live request's tree path crosses it.
    bool changed = false;
    bool again = true;
    while (again) {
        again = false;
        std::vector<char> used(f.n_original(), 0); // keyed by child endpoint
        for (auto [a, b] : f.requests()) {
            Vertex l = f.lca(a, b);
            for (Vertex x = a; x != l; x = f.parent(x)) used[x] = 1;
            for (Vertex x = b; x != l; x = f.parent(x)) used[x] = 1;
        }
        std::vector<Vertex> doomed;
        for (Vertex v : f.live_vertices())
            if (f.parent(v) >= 0 && !used[v]) doomed.push_back(v);
        for (Vertex v : doomed) {
            if (!f.live(v) || f.parent(v) < 0) continue;
            EditStatus st = f.contract_child(v);
            (void)st; // no request crosses the edge, contraction cannot fail
            rc.bump("useless_edge");
            changed = true;
        }
        // contraction can reroute nothing, one batch is enough
    }
    return changed ? ReduceOutcome::changed : ReduceOutcome::fixpoint;
}

ReduceOutcome rule_unit_request(WorkingForest& f, RuleCounters& rc)
{
    bool changed = false;
    bool again = true;
    while (again) {
        again = false;
        std::vector<VertexPair> reqs(f.requests().begin(), f.requests().end());
        for (auto [a, b] : reqs) {
            if (!f.live(a) || !f.live(b)) continue;
            if (!f.request_between(a, b)) continue; // purged meanwhile
            Vertex child = -1;
            if (f.parent(a) == b)
                child = a;
            else if (f.parent(b) == a)
                child = b;
            else
                continue;
            EditStatus st = f.cut_child(child);
            if (st == EditStatus::budget_exhausted) return ReduceOutcome::infeasible;
            rc.bump("unit_request");
            changed = true;
            again = true;
        }
    }
    return changed ? ReduceOutcome::changed : ReduceOutcome::fixpoint;
}

ReduceOutcome rule_subtree_isolation(WorkingForest& f, RuleCounters& rc)
{
    for (Vertex u : f.live_vertices()) {
        Vertex p = f.parent(u);
        if (p < 0) continue;
        bool blocked = false;
        for (auto [a, b] : f.requests()) {
            bool ina = f.in_subtree(a, u), inb = f.in_subtree(b, u);
            if (ina == inb) continue;
            Vertex outside = ina ? b : a;
            if (f.in_subtree(outside, p)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            EditStatus st = f.contract_child(u);
            if (st != EditStatus::ok)
                throw std::logic_error("subtree isolation contracted a unit request");
            rc.bump("subtree_isolation");
            return ReduceOutcome::changed;
        }
    }
    return ReduceOutcome::fixpoint;
}

ReduceOutcome rule_vc_exclusion(WorkingForest& f, RuleCounters& rc)
{
    for (Vertex u : f.live_vertices()) {
        if (!f.important(u)) continue;
        LeafGraph g = build_gu(f, u);
        if (g.max_degree() > 2) continue;
        int tau = min_vc_deg2(g).tau;
        std::vector<Vertex> excluded;
        for (Vertex l : g.nodes)
            if (vc_with_forced(g, {l}) != tau) excluded.push_back(l);
        if (excluded.empty()) continue;
        for (Vertex l : excluded) {
            EditStatus st = f.contract_child(l);
            if (st != EditStatus::ok)
                throw std::logic_error("vc exclusion contracted a unit request");
        }
        rc.bump("vc_exclusion", excluded.size());
        return ReduceOutcome::changed;
    }
    return ReduceOutcome::fixpoint;
}

ReduceOutcome rule_even_path_cut(WorkingForest& f, RuleCounters& rc)
{
    for (Vertex w : f.live_vertices()) {
        if (!f.important(w)) continue;
        LeafGraph g = build_gu(f, w);
        if (g.max_degree() > 2) continue;
        for (const ComponentShape& s : decompose_deg2(g)) {
            if (s.kind != ShapeKind::path || s.length() == 0 || s.length() % 2 != 0)
                continue;
            for (Vertex l : even_path_cover(s)) {
                EditStatus st = f.cut_child(l);
                if (st == EditStatus::budget_exhausted) return ReduceOutcome::infeasible;
            }
            rc.bump("even_path_cut");
            return ReduceOutcome::changed;
        }
    }
    return ReduceOutcome::fixpoint;
}

ReduceOutcome rule_cross_covered_contract(WorkingForest& f, RuleCounters& rc)
{
    for (Vertex w : f.live_vertices()) {
        if (!f.important(w) || f.parent(w) < 0) continue;
        LeafGraph g = build_gu(f, w);
        if (g.max_degree() > 2) continue;
        Vertex p = f.parent(w);
        // the cover cuts leaf edges only, so w itself must have no cross request
        if (!targets_within(f, w, p, w).empty()) continue;
        std::set<Vertex> crossed;
        for (Vertex l : g.nodes)
            if (!targets_within(f, l, p, w).empty()) crossed.insert(l);
        if (vc_with_forced(g, crossed) != min_vc_deg2(g).tau) continue;
        EditStatus st = f.contract_child(w);
        if (st != EditStatus::ok)
            throw std::logic_error("cross covered contract hit a unit request");
        rc.bump("cross_covered");
        return ReduceOutcome::changed;
    }
    return ReduceOutcome::fixpoint;
}

ReduceOutcome rule_grandparent_request(WorkingForest& f, RuleCounters& rc)
{
    for (Vertex w : f.live_vertices()) {
        if (!f.important(w)) continue;
        Vertex p = f.parent(w);
        if (p < 0) continue;
        LeafGraph g = build_gu(f, w);
        // the forced cut leans on u sitting in some minimum cover of G_w,
        // which only holds once the graph has maximum degree two
        if (g.max_degree() > 2) continue;
        int tau = min_vc_deg2(g).tau;
        for (Vertex u : f.children(w)) {
            if (!f.request_between(u, p)) continue;
            if (vc_with_forced(g, {u}) != tau) continue;
            EditStatus st = f.cut_child(u);
            if (st == EditStatus::budget_exhausted) return ReduceOutcome::infeasible;
            rc.bump("grandparent_cut");
            return ReduceOutcome::changed;
        }
    }
    return ReduceOutcome::fixpoint;
}

ReduceOutcome reduce_to_fixpoint(WorkingForest& f, RuleCounters& rc)
{
    using Rule = ReduceOutcome (*)(WorkingForest&, RuleCounters&);
    // even-path cuts run ahead of cover exclusion and exclusion ahead of
    // subtree isolation: in the listed-rule order each later rule's whole
    // trigger domain is swallowed by an earlier one, and the rules are
    // individually safe whenever their preconditions hold
    static const Rule rules[] = {
        rule_useless_edge,
        rule_unit_request,
        rule_even_path_cut,
        rule_vc_exclusion,
        rule_subtree_isolation,
        rule_cross_covered_contract,
        rule_grandparent_request,
    };
    bool any = false;
    bool again = true;
    while (again) {
        again = false;
        for (Rule r : rules) {
            ReduceOutcome out = r(f, rc);
            if (out == ReduceOutcome::infeasible) return ReduceOutcome::infeasible;
            if (out == ReduceOutcome::changed) {
                any = true;
                again = true;
                break; // restart from the first rule to keep preconditions fresh
            }
        }
    }
    return any ? ReduceOutcome::changed : ReduceOutcome::fixpoint;
}

std::vector<std::string> check_reduced(const WorkingForest& f)
{
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(s); };

    for (auto [a, b] : f.requests())
        if (f.parent(a) == b || f.parent(b) == a)
            fail("request between parent and child (" + std::to_string(a) + "," +
                 std::to_string(b) + ")");

    for (Vertex u : f.live_vertices()) {
        Vertex p = f.parent(u);
        if (p >= 0) {
            bool crossing = false;
            for (auto [a, b] : f.requests()) {
                bool ina = f.in_subtree(a, u), inb = f.in_subtree(b, u);
                if (ina == inb) continue;
                if (f.in_subtree(ina ? b : a, p)) crossing = true;
            }
            if (!crossing)
                fail("no request between subtree of " + std::to_string(u) +
                     " and the rest of its parent's subtree");
        }
        if (!f.childless(u)) {
            bool internal_req = false;
            for (auto [a, b] : f.requests())
                if (a != u && b != u && f.in_subtree(a, u) && f.in_subtree(b, u))
                    internal_req = true;
            if (!internal_req)
                fail("internal vertex " + std::to_string(u) +
                     " has no request below it");
        }
        if (f.important(u)) {
            LeafGraph g = build_gu(f, u);
            if (g.max_degree() <= 2) {
                int tau = min_vc_deg2(g).tau;
                for (Vertex l : g.nodes) {
                    if (g.degree(l) == 0)
                        fail("leaf " + std::to_string(l) + " has no sibling request");
                    if (vc_with_forced(g, {l}) != tau)
                        fail("leaf " + std::to_string(l) + " lies in no minimum cover");
                }
                for (const ComponentShape& s : decompose_deg2(g))
                    if (s.kind == ShapeKind::path && s.length() > 0 && s.length() % 2 == 0)
                        fail("even path in the request graph of " + std::to_string(u));
                if (f.parent(u) >= 0) {
                    Vertex p2 = f.parent(u);
                    if (targets_within(f, u, p2, u).empty()) {
                        std::set<Vertex> crossed;
                        for (Vertex l : g.nodes)
                            if (!targets_within(f, l, p2, u).empty()) crossed.insert(l);
                        bool external = false;
                        for (auto [a, b] : cross_requests(f, u))
                            if (!g.has(f.in_subtree(a, u) ? a : b)) external = true;
                        if (!external && vc_with_forced(g, crossed) == tau)
                            fail("a minimum cover of " + std::to_string(u) +
                                 " cuts all its cross requests");
                    }
                }
            }
        }
    }
    return bad;
}

} // namespace tct

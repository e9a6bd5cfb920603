#include "elp/elementary.hpp"

namespace elp {

bool is_outbound(const Program& p, const AtomSet& y, const AtomSet& x) {
    if (!y.subset_of(x)) throw PreconditionViolated("is_outbound: y must be a subset of x");
    AtomSet rest = x.minus(y);
    for (const Rule& r : p.rules()) {
        if (r.head.intersects(y) && r.pos.intersects(rest) && !r.head.intersects(rest) &&
            !r.pos.intersects(y))
            return true;
    }
    return false;
}

bool is_elementary_loop_definitional(const Program& p, const AtomSet& x, std::size_t guard) {
    if (x.empty() || !x.subset_of(p.atoms())) return false;
    if (x.size() > guard) throw GuardExceeded("is_elementary_loop", x.size(), guard);
    return for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
        if (y.size() == x.size()) return true;
        return is_outbound(p, y, x);
    });
}

bool is_elementary_loop_via_subgraph(const Program& p, const AtomSet& x) {
    if (x.empty() || !x.subset_of(p.atoms())) return false;
    return elementary_subgraph(p, x).strongly_connected();
}

bool is_elementary_loop(const Program& p, const AtomSet& x, std::size_t guard,
                        ElementaryMode mode) {
    if (mode == ElementaryMode::Subgraph ||
        (mode == ElementaryMode::Auto && p.nondisjunctive()))
        return is_elementary_loop_via_subgraph(p, x);
    return is_elementary_loop_definitional(p, x, guard);
}

std::vector<AtomSet> elementary_loops(const Program& p, std::size_t guard, ElementaryMode mode) {
    Digraph dep = dependency_graph(p);
    std::vector<AtomSet> out;
    for (const AtomSet& scc : dep.sccs()) {
        if (scc.size() > guard) throw GuardExceeded("elementary_loops", scc.size(), guard);
        for_each_subset(scc, [&](const AtomSet& sub) {
            if (!sub.empty() && is_elementary_loop(p, sub, guard, mode)) out.push_back(sub);
            return true;
        });
    }
    canonicalize(out);
    return out;
}

Program restrict_xy(const Program& p, const AtomSet& x, const AtomSet& y) {
    std::vector<Rule> out;
    for (const Rule& r : p.rules()) {
        bool body = r.pos.subset_of(x) && !r.neg.intersects(x) && r.dneg.subset_of(x);
        if (body && !r.head.minus(y).intersects(x)) out.push_back(r);
    }
    return p.with_rules(std::move(out));
}

bool is_trivial_loop(const Program& p, const AtomSet& l) {
    if (!l.is_singleton() || !l.subset_of(p.atoms())) return false;
    AtomIndex a = l.front();
    for (const Rule& r : p.rules())
        if (r.head.contains(a) && r.pos.contains(a)) return false;
    return true;
}

bool is_gs_elementary(const Program& p, const AtomSet& l) {
    if (!p.nondisjunctive())
        throw PreconditionViolated("is_gs_elementary: nondisjunctive programs only");
    if (!is_loop(p, l) || is_trivial_loop(p, l)) return false;
    // R^-(l') ∩ R^+(l) nonempty per rule: head atom in l', body disjoint
    // from l' yet meeting l.
    return for_each_nonempty_subset_canonical(l, [&](const AtomSet& sub) {
        if (sub.size() == l.size()) return true;
        if (!is_loop(p, sub) || is_trivial_loop(p, sub)) return true;
        for (const Rule& r : p.rules()) {
            if (r.head.intersects(sub) && !r.pos.intersects(sub) && r.pos.intersects(l))
                return true;
        }
        return false;
    });
}

} // namespace elp

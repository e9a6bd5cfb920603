#include "elp/classify.hpp"

#include <algorithm>

#include "elp/elementary.hpp"
#include "elp/graph.hpp"

namespace elp {

namespace {

// First rule whose head and positive body share an atom, if any.
std::optional<ClassViolation> self_edge_violation(const Program& p) {
    for (std::size_t i = 0; i < p.rules().size(); ++i) {
        AtomSet both = p.rules()[i].head.intersect(p.rules()[i].pos);
        if (!both.empty()) return ClassViolation{i, AtomSet{both.front()}};
    }
    return std::nullopt;
}

// A rule contributing an edge inside the given loop.
std::size_t rule_with_edge_in(const Program& p, const AtomSet& loop) {
    for (std::size_t i = 0; i < p.rules().size(); ++i)
        if (p.rules()[i].head.intersects(loop) && p.rules()[i].pos.intersects(loop)) return i;
    return 0;
}

std::optional<ClassViolation> tight_violation(const Program& p) {
    if (auto v = self_edge_violation(p)) return v;
    for (const AtomSet& scc : dependency_graph(p).sccs())
        if (scc.size() >= 2) return ClassViolation{rule_with_edge_in(p, scc), scc};
    return std::nullopt;
}

std::optional<ClassViolation> hcf_violation(const Program& p) {
    std::vector<AtomSet> comps = dependency_graph(p).sccs();
    for (std::size_t i = 0; i < p.rules().size(); ++i) {
        const AtomSet& head = p.rules()[i].head;
        if (head.size() < 2) continue;
        for (const AtomSet& scc : comps)
            if (head.intersect(scc).size() >= 2) return ClassViolation{i, scc};
    }
    return std::nullopt;
}

} // namespace

bool is_tight(const Program& p) { return !tight_violation(p).has_value(); }

bool is_e_tight(const Program& p) { return is_tight(p); }

bool is_e_tight_by_enumeration(const Program& p, std::size_t guard) {
    for (const AtomSet& l : elementary_loops(p, guard))
        if (!is_trivial_loop(p, l)) return false;
    return true;
}

bool is_hcf(const Program& p) { return !hcf_violation(p).has_value(); }

std::pair<bool, std::optional<ClassViolation>> hef_check(const Program& p, std::size_t guard) {
    Digraph dep = dependency_graph(p);
    // Only rules with two head atoms in one SCC can violate, and only
    // via an elementary loop inside that SCC.
    std::optional<ClassViolation> best;
    for (const AtomSet& scc : dep.sccs()) {
        bool relevant = false;
        for (const Rule& r : p.rules())
            if (r.head.intersect(scc).size() >= 2) {
                relevant = true;
                break;
            }
        if (!relevant) continue;
        if (scc.size() > guard) throw GuardExceeded("is_hef", scc.size(), guard);
        for_each_nonempty_subset_canonical(scc, [&](const AtomSet& y) {
            for (std::size_t i = 0; i < p.rules().size(); ++i) {
                if (p.rules()[i].head.intersect(y).size() < 2) continue;
                if (is_elementary_loop(p, y, guard)) {
                    if (!best || canonical_less(y, best->loop)) best = ClassViolation{i, y};
                    return false; // canonical minimum of this SCC found
                }
                break; // y not elementary: no other rule matters
            }
            return true;
        });
    }
    return {!best.has_value(), best};
}

bool is_hef(const Program& p, std::size_t guard) { return hef_check(p, guard).first; }

ClassReport classify(const Program& p, std::size_t guard) {
    ClassReport rep;
    auto tv = tight_violation(p);
    rep.tight = !tv.has_value();
    rep.e_tight = rep.tight;
    rep.tight_witness = tv;
    auto hv = hcf_violation(p);
    rep.hcf = !hv.has_value();
    rep.hcf_witness = hv;
    try {
        auto [hef, witness] = hef_check(p, guard);
        rep.hef = hef;
        rep.hef_witness = witness;
    } catch (const GuardExceeded&) {
        rep.hef = std::nullopt;
    }
    return rep;
}

Program shift(const Program& p) {
    std::vector<Rule> out;
    for (const Rule& r : p.rules()) {
        if (r.head.size() <= 1) {
            out.push_back(r);
            continue;
        }
        for (AtomIndex a : r.head) {
            Rule s;
            s.head = AtomSet{a};
            s.pos = r.pos;
            s.neg = r.neg.unite(r.head.without(a));
            s.dneg = r.dneg;
            out.push_back(std::move(s));
        }
    }
    return p.with_rules(std::move(out));
}

bool is_inherently_tight(const Program& p, const AtomSet& x) {
    Program px = restrict_x(p, x);
    AtomSet derived;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Rule& r : px.rules()) {
            AtomSet hx = r.head.intersect(x);
            if (!hx.is_singleton() || derived.contains(hx.front())) continue;
            if (r.pos.subset_of(derived)) {
                derived.add(hx.front());
                grew = true;
            }
        }
    }
    return derived == x;
}

std::pair<Program, Atom> unfoundedfree_reduction(const Program& p, const AtomSet& x) {
    AtomTable table = p.table(); // copy, then extend with the fresh atom
    std::string name = "e";
    for (int i = 1; table.find(name).has_value(); ++i) name = "e" + std::to_string(i);
    AtomIndex e = table.intern(name);

    std::vector<Rule> rules;
    Program relevant = restrict_x(p, x);
    for (const Rule& r : relevant.rules())
        rules.push_back(Rule{r.head, r.pos.with(e), r.neg, r.dneg});
    for (AtomIndex a : x.with(e)) rules.push_back(Rule{AtomSet{e}, AtomSet{a}, {}, {}});

    Program out(std::make_shared<AtomTable>(std::move(table)), std::move(rules));
    return {std::move(out), Atom{e, name}};
}

} // namespace elp

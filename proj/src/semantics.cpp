#include "elp/semantics.hpp"

#include "elp/elementary.hpp"

namespace elp {

bool satisfies_rule(const AtomSet& x, const Rule& r) {
    bool body = r.pos.subset_of(x) && !r.neg.intersects(x) && r.dneg.subset_of(x);
    return !body || r.head.intersects(x);
}

bool is_model(const AtomSet& x, const Program& p) {
    for (const Rule& r : p.rules())
        if (!satisfies_rule(x, r)) return false;
    return true;
}

Program reduct(const Program& p, const AtomSet& x) {
    std::vector<Rule> out;
    for (const Rule& r : p.rules()) {
        if (r.neg.intersects(x) || !r.dneg.subset_of(x)) continue;
        out.push_back(Rule{r.head, r.pos, {}, {}});
    }
    return p.with_rules(std::move(out));
}

bool is_stable(const Program& p, const AtomSet& x) {
    Program red = reduct(p, x);
    if (!is_model(x, red)) return false;
    // Minimality only compares against proper subsets of x, so it
    // suffices to enumerate those.
    return for_each_subset(x, [&](const AtomSet& y) {
        if (y.size() == x.size()) return true;
        return !is_model(y, red);
    });
}

std::vector<AtomSet> stable_models(const Program& p, std::size_t guard) {
    const AtomSet& all = p.atoms();
    if (all.size() > guard) throw GuardExceeded("stable_models", all.size(), guard);
    std::vector<AtomSet> out;
    for_each_subset(all, [&](const AtomSet& x) {
        if (is_stable(p, x)) out.push_back(x);
        return true;
    });
    canonicalize(out);
    return out;
}

bool is_supported(const Program& p, const AtomSet& x) {
    Program px = restrict_x(p, x);
    for (AtomIndex a : x) {
        bool found = false;
        for (const Rule& r : px.rules()) {
            AtomSet hx = r.head.intersect(x);
            if (hx.is_singleton() && hx.front() == a) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace elp

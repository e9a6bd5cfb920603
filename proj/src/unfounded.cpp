#include "elp/unfounded.hpp"

#include <algorithm>
#include <sstream>

#include "elp/elementary.hpp"
#include "elp/graph.hpp"
#include "elp/semantics.hpp"

namespace elp {

const char* criterion_name(StabilityCriterion c) {
    switch (c) {
        case StabilityCriterion::A: return "a";
        case StabilityCriterion::B: return "b";
        case StabilityCriterion::Bprime: return "bprime";
        case StabilityCriterion::C: return "c";
        case StabilityCriterion::D: return "d";
        case StabilityCriterion::E: return "e";
        case StabilityCriterion::Eprime: return "eprime";
    }
    return "?";
}

std::optional<StabilityCriterion> criterion_from_name(std::string_view name) {
    for (StabilityCriterion c : all_criteria)
        if (name == criterion_name(c)) return c;
    return std::nullopt;
}

bool externally_supported(const Program& p, const AtomSet& y, const AtomSet& x) {
    for (const Rule& r : p.rules()) {
        if (!r.head.intersects(y) || r.pos.intersects(y)) continue;
        bool body = r.pos.subset_of(x) && !r.neg.intersects(x) && r.dneg.subset_of(x);
        if (body && !r.head.minus(y).intersects(x)) return true;
    }
    return false;
}

bool loop_formula_holds(const Program& p, const AtomSet& y, const AtomSet& x) {
    if (y.empty()) throw PreconditionViolated("loop_formula_holds: y must be nonempty");
    return !y.subset_of(x) || externally_supported(p, y, x);
}

bool is_unfounded(const Program& p, const AtomSet& y, const AtomSet& x) {
    return !externally_supported(p, y, x);
}

bool is_elementarily_unfounded(const Program& p, const AtomSet& y, const AtomSet& x,
                               std::size_t guard) {
    if (y.empty() || !y.subset_of(p.atoms()))
        throw PreconditionViolated("is_elementarily_unfounded: y must be nonempty and occur in p");
    if (!is_unfounded(p, y, x)) return false;
    if (y.is_singleton()) return true;
    return is_elementary_loop(restrict_xy(p, x, y), y, guard);
}

std::vector<AtomSet> elementarily_unfounded_sets(const Program& p, const AtomSet& x,
                                                 std::size_t guard) {
    std::vector<AtomSet> out;
    // Unfounded singletons over all occurring atoms.
    for (AtomIndex a : p.atoms()) {
        AtomSet s{a};
        if (is_unfounded(p, s, x)) out.push_back(s);
    }
    // Non-singleton elementarily unfounded sets are subsets of x.
    AtomSet base = x.intersect(p.atoms());
    if (base.size() > guard) throw GuardExceeded("elementarily_unfounded_sets", base.size(), guard);
    for_each_subset(base, [&](const AtomSet& y) {
        if (y.size() >= 2 && is_elementarily_unfounded(p, y, x, guard)) out.push_back(y);
        return true;
    });
    canonicalize(out);
    return out;
}

std::vector<AtomSet> minimal_unfounded_sets(const Program& p, const AtomSet& x,
                                            std::size_t guard) {
    const AtomSet& all = p.atoms();
    if (all.size() > guard) throw GuardExceeded("minimal_unfounded_sets", all.size(), guard);
    std::vector<AtomSet> unfounded;
    for_each_subset(all, [&](const AtomSet& y) {
        if (!y.empty() && is_unfounded(p, y, x)) unfounded.push_back(y);
        return true;
    });
    std::vector<AtomSet> out;
    for (const AtomSet& y : unfounded) {
        bool minimal = std::none_of(unfounded.begin(), unfounded.end(), [&](const AtomSet& z) {
            return z.proper_subset_of(y);
        });
        if (minimal) out.push_back(y);
    }
    canonicalize(out);
    return out;
}

namespace {

// First proper subset of x (canonical order) satisfying the reduct.
CriterionResult check_reduct_minimal(const Program& p, const AtomSet& x) {
    Program red = reduct(p, x);
    if (!is_model(x, red)) return {false, x};
    if (!x.empty() && is_model(AtomSet{}, red)) return {false, AtomSet{}};
    CriterionResult res{true, std::nullopt};
    for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
        if (y.size() == x.size()) return true;
        if (is_model(y, red)) {
            res = {false, y};
            return false;
        }
        return true;
    });
    return res;
}

CriterionResult first_failing_lf(const Program& p, const AtomSet& x,
                                 const std::vector<AtomSet>& candidates) {
    for (const AtomSet& y : candidates)
        if (!loop_formula_holds(p, y, x)) return {false, y};
    return {true, std::nullopt};
}

// Maximal sets Z with Z an elementary loop of the Z-relevant
// subprogram, plus every occurring singleton (condition (e)).
std::vector<AtomSet> criterion_e_candidates(const Program& p, const AtomSet& x,
                                            std::size_t guard) {
    if (x.size() > guard) throw GuardExceeded("stable_via(e)", x.size(), guard);
    std::vector<AtomSet> loops_of_relevant;
    for_each_subset(x, [&](const AtomSet& z) {
        if (!z.empty() && is_elementary_loop(restrict_xy(p, x, z), z, guard))
            loops_of_relevant.push_back(z);
        return true;
    });
    std::vector<AtomSet> out;
    for (const AtomSet& z : loops_of_relevant) {
        bool maximal =
            std::none_of(loops_of_relevant.begin(), loops_of_relevant.end(),
                         [&](const AtomSet& w) { return z.proper_subset_of(w); });
        if (maximal) out.push_back(z);
    }
    for (AtomIndex a : p.atoms()) out.push_back(AtomSet{a});
    canonicalize(out);
    return out;
}

} // namespace

CriterionResult stable_via_witness(const Program& p, const AtomSet& x, StabilityCriterion c,
                                   std::size_t guard) {
    if (!x.subset_of(p.atoms()) || !is_model(x, p))
        throw PreconditionViolated("stable_via: x must be a model over the occurring atoms");
    switch (c) {
        case StabilityCriterion::A:
            return check_reduct_minimal(p, x);
        case StabilityCriterion::B: {
            const AtomSet& all = p.atoms();
            if (all.size() > guard) throw GuardExceeded("stable_via(b)", all.size(), guard);
            CriterionResult res{true, std::nullopt};
            for_each_nonempty_subset_canonical(all, [&](const AtomSet& y) {
                if (!loop_formula_holds(p, y, x)) {
                    res = {false, y};
                    return false;
                }
                return true;
            });
            return res;
        }
        case StabilityCriterion::Bprime: {
            if (x.size() > guard) throw GuardExceeded("stable_via(bprime)", x.size(), guard);
            CriterionResult res{true, std::nullopt};
            for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
                if (is_unfounded(p, y, x)) {
                    res = {false, y};
                    return false;
                }
                return true;
            });
            return res;
        }
        case StabilityCriterion::C:
            return first_failing_lf(p, x, loops(p, guard));
        case StabilityCriterion::D:
            return first_failing_lf(p, x, elementary_loops(p, guard));
        case StabilityCriterion::E:
            return first_failing_lf(p, x, criterion_e_candidates(p, x, guard));
        case StabilityCriterion::Eprime: {
            if (x.size() > guard) throw GuardExceeded("stable_via(eprime)", x.size(), guard);
            CriterionResult res{true, std::nullopt};
            for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
                if (is_elementarily_unfounded(p, y, x, guard)) {
                    res = {false, y};
                    return false;
                }
                return true;
            });
            return res;
        }
    }
    throw std::logic_error("unreachable criterion");
}

bool stable_via(const Program& p, const AtomSet& x, StabilityCriterion c, std::size_t guard) {
    return stable_via_witness(p, x, c, guard).holds;
}

namespace {

void append_conjunct(std::ostringstream& out, bool& first, const std::string& text) {
    if (!first) out << " & ";
    out << text;
    first = false;
}

} // namespace

std::string external_support_formula_text(const Program& p, const AtomSet& y) {
    std::ostringstream out;
    bool any = false;
    for (const Rule& r : p.rules()) {
        if (!r.head.intersects(y) || r.pos.intersects(y)) continue;
        std::ostringstream conj;
        bool first = true;
        for (AtomIndex a : r.pos) append_conjunct(conj, first, p.atom_name(a));
        for (AtomIndex a : r.neg) append_conjunct(conj, first, "~" + p.atom_name(a));
        for (AtomIndex a : r.dneg) append_conjunct(conj, first, "~~" + p.atom_name(a));
        for (AtomIndex a : r.head.minus(y)) append_conjunct(conj, first, "~" + p.atom_name(a));
        if (any) out << " | ";
        out << (first ? "true" : "(" + conj.str() + ")");
        any = true;
    }
    return any ? out.str() : "false";
}

std::string loop_formula_text(const Program& p, const AtomSet& y) {
    std::ostringstream out;
    bool first = true;
    for (AtomIndex a : y) {
        if (!first) out << " & ";
        out << p.atom_name(a);
        first = false;
    }
    if (first) out << "true";
    out << " -> " << external_support_formula_text(p, y);
    return out.str();
}

} // namespace elp

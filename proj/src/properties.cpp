#include "elp/properties.hpp"

#include <algorithm>
#include <sstream>

#include "elp/classify.hpp"
#include "elp/elementary.hpp"
#include "elp/graph.hpp"
#include "elp/parser.hpp"
#include "elp/semantics.hpp"
#include "elp/stability.hpp"
#include "elp/unfounded.hpp"

namespace elp {
namespace {

using Detail = std::optional<std::string>;

std::string show(const Program& p, const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (AtomIndex a : s) {
        if (!first) out += ",";
        out += p.atom_name(a);
        first = false;
    }
    return out + "}";
}

std::vector<AtomSet> interpretations(const Program& p) {
    std::vector<AtomSet> out;
    for_each_subset(p.atoms(), [&](const AtomSet& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

std::vector<AtomSet> models_of(const Program& p) {
    std::vector<AtomSet> out;
    for (const AtomSet& x : interpretations(p))
        if (is_model(x, p)) out.push_back(x);
    return out;
}

// Shift, then drop constraints and doubly-negated bodies: a
// nondisjunctive test subject derived from any instance. Its semantics
// need not relate to p's; nondisjunctive-only statements are checked
// against it when p itself is disjunctive.
Program nondisjunctive_variant(const Program& p) {
    std::vector<Rule> out;
    Program shifted = shift(p);
    for (const Rule& r : shifted.rules())
        if (r.head.size() == 1) out.push_back(Rule{r.head, r.pos, r.neg, {}});
    return p.with_rules(std::move(out));
}

// Footnote variant of the removal condition: head meets x exactly in
// the removed atom. Interchangeable with r_omega when y ⊆ x.
AtomSet r_omega_footnote(const Program& p, const AtomSet& x, const AtomSet& y) {
    Program px = restrict_x(p, x);
    AtomSet current = y;
    bool changed = true;
    while (changed) {
        changed = false;
        AtomSet removable;
        for (AtomIndex a : current) {
            for (const Rule& r : px.rules()) {
                AtomSet hx = r.head.intersect(x);
                if (hx.is_singleton() && hx.front() == a && !r.pos.intersects(current)) {
                    removable.add(a);
                    break;
                }
            }
        }
        if (!removable.empty()) {
            current = current.minus(removable);
            changed = true;
        }
    }
    return current;
}

// Size gates: sweeping all interpretations (and subsets of subsets) is
// kept to sizes where the sweep stays well under a second.
bool atoms_within(const Program& p, std::size_t n) { return p.atoms().size() <= n; }

// ---- core ----------------------------------------------------------

Detail prop_is_stable_matches_full_enumeration(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        Program red = reduct(p, x);
        bool expected = is_model(x, red);
        if (expected) {
            for (const AtomSet& y : interpretations(p)) {
                if (y.size() < x.size() && y.subset_of(x) && is_model(y, red)) {
                    expected = false;
                    break;
                }
            }
        }
        if (is_stable(p, x) != expected)
            return "x=" + show(p, x) + ": optimized is_stable disagrees with full enumeration";
    }
    return std::nullopt;
}

Detail prop_stable_models_are_models(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 10)) return std::nullopt;
    for (const AtomSet& x : stable_models(p, o.guard))
        if (!is_model(x, p)) return "stable model " + show(p, x) + " is not a model";
    return std::nullopt;
}

Detail prop_stable_models_are_supported(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 10)) return std::nullopt;
    for (const AtomSet& x : stable_models(p, o.guard))
        if (!is_supported(p, x)) return "stable model " + show(p, x) + " is not supported";
    return std::nullopt;
}

Detail prop_subset_rule_monotonicity(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 6) || p.rules().size() > 6) return std::nullopt;
    const std::size_t n = p.rules().size();
    for (const AtomSet& x : models_of(p)) {
        bool witnessed = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !witnessed; ++mask) {
            std::vector<Rule> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) sub.push_back(p.rules()[i]);
            witnessed = is_stable(p.with_rules(std::move(sub)), x);
        }
        if (witnessed != is_stable(p, x))
            return "model " + show(p, x) + ": rule-subset witness disagrees with is_stable";
    }
    return std::nullopt;
}

Detail prop_reduct_idempotent(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        Program once = reduct(p, x);
        if (!(reduct(once, x) == once)) return "reduct not idempotent at x=" + show(p, x);
    }
    return std::nullopt;
}

Detail prop_render_parse_roundtrip(const Program& p, const VerifyOptions&) {
    try {
        std::string text = render_program(p);
        Program q = parse_program(text);
        if (!equal_modulo_renaming(p, q)) return "reparse is not the same program";
        if (render_program(q) != text) return "canonical text is not a render fixpoint";
    } catch (const SyntaxError& e) {
        return std::string("rendered text failed to parse: ") + e.what();
    }
    return std::nullopt;
}

// ---- graph ---------------------------------------------------------

Detail prop_loops_match_alternative(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        if (x.empty()) continue;
        bool alt = for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
            if (y.size() == x.size()) return true;
            AtomSet rest = x.minus(y);
            for (const Rule& r : p.rules())
                if (r.head.intersects(y) && r.pos.intersects(rest)) return true;
            return false;
        });
        if (is_loop(p, x) != alt)
            return "x=" + show(p, x) + ": graph loop test disagrees with rule-based test";
    }
    return std::nullopt;
}

Detail prop_elementary_subgraph_within_dependency(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    Digraph dep = dependency_graph(p);
    for (const AtomSet& x : interpretations(p)) {
        for (const auto& [a, b] : elementary_subgraph(p, x).edges())
            if (!dep.has_edge(a, b))
                return "EC edge (" + p.atom_name(a) + "," + p.atom_name(b) +
                       ") missing from dependency graph, x=" + show(p, x);
    }
    return std::nullopt;
}

Detail theorem3_agreement_on(const Program& q, const VerifyOptions& o) {
    for (const AtomSet& x : interpretations(q)) {
        if (x.empty()) continue;
        bool by_def = is_elementary_loop_definitional(q, x, o.guard);
        bool by_graph = is_elementary_loop_via_subgraph(q, x);
        if (by_def != by_graph)
            return "x=" + show(q, x) + ": definition says " + (by_def ? "yes" : "no") +
                   ", elementary subgraph says " + (by_graph ? "yes" : "no");
    }
    return std::nullopt;
}

Detail prop_theorem3_subgraph_agreement(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    if (auto d = theorem3_agreement_on(nondisjunctive_variant(p), o)) return d;
    if (p.nondisjunctive())
        if (auto d = theorem3_agreement_on(p, o)) return d;
    if (is_hef(p, o.guard)) // Theorem 3 extended to HEF programs
        if (auto d = theorem3_agreement_on(p, o)) return d;
    return std::nullopt;
}

// ---- elementary ----------------------------------------------------

Detail prop_singletons_are_elementary(const Program& p, const VerifyOptions& o) {
    for (AtomIndex a : p.atoms())
        if (!is_elementary_loop(p, AtomSet{a}, o.guard))
            return "singleton {" + p.atom_name(a) + "} not an elementary loop";
    return std::nullopt;
}

Detail prop_elementary_loops_are_loops(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    std::vector<AtomSet> all = loops(p, o.guard);
    for (const AtomSet& x : elementary_loops(p, o.guard))
        if (std::find(all.begin(), all.end(), x) == all.end())
            return "elementary loop " + show(p, x) + " is not a loop";
    return std::nullopt;
}

Detail prop_external_support_lifting(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 7)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool bad = !for_each_subset(x, [&](const AtomSet& y) {
            return for_each_subset(y, [&](const AtomSet& z) {
                if (is_outbound(p, z, y)) return true;
                if (externally_supported(p, z, x) && !externally_supported(p, y, x))
                    return false;
                return true;
            });
        });
        if (bad) return "external support fails to lift under x=" + show(p, x);
    }
    return std::nullopt;
}

Detail prop_elementary_alternative(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        if (x.empty()) continue;
        bool alt = for_each_nonempty_subset_canonical(x, [&](const AtomSet& y) {
            if (y.size() == x.size()) return true;
            if (!is_elementary_loop_definitional(p, y, o.guard)) return true;
            return is_outbound(p, y, x);
        });
        if (is_elementary_loop_definitional(p, x, o.guard) != alt)
            return "x=" + show(p, x) + ": elementary-subset formulation disagrees";
    }
    return std::nullopt;
}

Detail prop_loop_formula_entailment(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    std::vector<AtomSet> elems = elementary_loops(p, o.guard);
    std::vector<AtomSet> worlds = interpretations(p);
    for (const AtomSet& y : interpretations(p)) {
        if (y.empty()) continue;
        bool found = false;
        for (const AtomSet& z : elems) {
            if (!z.subset_of(y)) continue;
            bool entails = true;
            for (const AtomSet& w : worlds) {
                if (loop_formula_holds(p, z, w) && !loop_formula_holds(p, y, w)) {
                    entails = false;
                    break;
                }
            }
            if (entails) {
                found = true;
                break;
            }
        }
        if (!found) return "no elementary loop inside " + show(p, y) + " entails its loop formula";
    }
    return std::nullopt;
}

Detail gs_agreement_on(const Program& q, const VerifyOptions& o) {
    for (const AtomSet& l : interpretations(q)) {
        if (l.empty()) continue;
        bool gs = is_gs_elementary(q, l);
        bool expected =
            is_elementary_loop_definitional(q, l, o.guard) && !is_trivial_loop(q, l);
        if (gs != expected)
            return "l=" + show(q, l) + ": GS-elementary=" + (gs ? "yes" : "no") +
                   " but nontrivial-elementary=" + (expected ? "yes" : "no");
    }
    return std::nullopt;
}

Detail prop_gs_equivalence(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    if (p.nondisjunctive())
        if (auto d = gs_agreement_on(p, o)) return d;
    return gs_agreement_on(nondisjunctive_variant(p), o);
}

Detail prop_shift_preserves_elementary(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    Program sh = shift(p);
    for (const AtomSet& x : interpretations(p)) {
        if (x.empty()) continue;
        if (is_elementary_loop_definitional(p, x, o.guard) &&
            !is_elementary_loop_definitional(sh, x, o.guard))
            return "elementary loop " + show(p, x) + " lost by shifting";
    }
    return std::nullopt;
}

Detail prop_shift_restriction_elementary(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    Program sh = shift(p);
    for (const AtomSet& x : interpretations(p)) {
        Program shx = restrict_x(sh, x);
        bool ok = for_each_subset(x, [&](const AtomSet& y) {
            if (y.empty()) return true;
            if (is_elementary_loop_definitional(shx, y, o.guard) &&
                !is_elementary_loop_definitional(p, y, o.guard))
                return false;
            return true;
        });
        if (!ok)
            return "shifted restriction has an elementary loop that p lacks, x=" + show(p, x);
    }
    return std::nullopt;
}

Detail prop_restriction_elementary_equivalence(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    Program q = p.nondisjunctive() ? p : nondisjunctive_variant(p);
    for (const AtomSet& x : interpretations(q)) {
        Program qx = restrict_x(q, x);
        for (const AtomSet& y : interpretations(q)) {
            if (y.size() < 2) continue;
            bool via_xy = is_elementary_loop(restrict_xy(q, x, y), y, o.guard);
            bool via_x = is_elementary_loop(qx, y, o.guard);
            if (via_xy != via_x)
                return "y=" + show(q, y) + ", x=" + show(q, x) +
                       ": relevant-subprogram elementarity differs between the two restrictions";
        }
    }
    return std::nullopt;
}

// ---- unfounded -----------------------------------------------------

Detail prop_theorem1_criteria_agreement(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : models_of(p)) {
        bool expected = stable_via(p, x, StabilityCriterion::A, o.guard);
        for (StabilityCriterion c : all_criteria) {
            bool got = stable_via(p, x, c, o.guard);
            if (got != expected)
                return "model " + show(p, x) + ": criterion " + criterion_name(c) + " says " +
                       (got ? "stable" : "not stable") + ", criterion a says " +
                       (expected ? "stable" : "not stable");
        }
    }
    return std::nullopt;
}

Detail prop_theorem2_minimal_unfounded(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        auto eus = elementarily_unfounded_sets(p, x, o.guard);
        auto mus = minimal_unfounded_sets(p, x, o.guard);
        if (eus != mus)
            return "x=" + show(p, x) +
                   ": elementarily unfounded sets differ from minimal unfounded sets";
    }
    return std::nullopt;
}

Detail prop_corollary1_antichain(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        auto eus = elementarily_unfounded_sets(p, x, o.guard);
        for (const AtomSet& y : eus) {
            if (externally_supported(p, y, x))
                return "x=" + show(p, x) + ": eus " + show(p, y) + " is externally supported";
            bool subs_ok = for_each_subset(y, [&](const AtomSet& z) {
                if (z.empty() || z.size() == y.size()) return true;
                return externally_supported(p, z, x);
            });
            if (!subs_ok)
                return "x=" + show(p, x) + ": eus " + show(p, y) +
                       " has an unsupported proper subset";
            for (const AtomSet& z : eus)
                if (z.proper_subset_of(y))
                    return "x=" + show(p, x) + ": eus " + show(p, z) + " inside eus " + show(p, y);
        }
    }
    return std::nullopt;
}

Detail prop_relevant_elementary_subsets_supported(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool ok = for_each_subset(x, [&](const AtomSet& y) {
            if (y.size() < 2) return true;
            if (!is_elementary_loop(restrict_xy(p, x, y), y, o.guard)) return true;
            return for_each_subset(y, [&](const AtomSet& z) {
                if (z.empty() || z.size() == y.size()) return true;
                return externally_supported(p, z, x);
            });
        });
        if (!ok)
            return "x=" + show(p, x) +
                   ": elementary loop of the relevant subprogram has an unsupported subset";
    }
    return std::nullopt;
}

Detail prop_eus_elementary_and_unfounded(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        for (const AtomSet& y : elementarily_unfounded_sets(p, x, o.guard)) {
            if (!is_elementary_loop(p, y, o.guard))
                return "eus " + show(p, y) + " is not an elementary loop of p";
            if (!is_unfounded(p, y, x))
                return "eus " + show(p, y) + " is not unfounded, x=" + show(p, x);
        }
    }
    return std::nullopt;
}

// ---- classify ------------------------------------------------------

Detail prop_tight_iff_e_tight(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    bool by_enum = is_e_tight_by_enumeration(p, o.guard);
    if (is_tight(p) != by_enum)
        return std::string("tight=") + (is_tight(p) ? "yes" : "no") +
               " but e-tight-by-enumeration=" + (by_enum ? "yes" : "no");
    return std::nullopt;
}

Detail prop_hcf_implies_hef(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    if (is_hcf(p) && !is_hef(p, o.guard)) return "HCF program is not HEF";
    return std::nullopt;
}

Detail prop_theorem5_shift_equivalence(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    auto original = stable_models(p, o.guard);
    auto shifted = stable_models(shift(p), o.guard);
    for (const AtomSet& x : shifted)
        if (std::find(original.begin(), original.end(), x) == original.end())
            return "stable model " + show(p, x) + " of the shifted program is not stable in p";
    if (is_hef(p, o.guard) && original != shifted)
        return "HEF program and its shifted variant have different stable models";
    return std::nullopt;
}

Detail prop_inherent_tight_implies_stable(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : models_of(p))
        if (is_inherently_tight(p, x) && !is_stable(p, x))
            return "inherently tight on model " + show(p, x) + " but not stable";
    return std::nullopt;
}

Detail prop_theorem6_inherent_tightness(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    Program q = p.nondisjunctive() ? p : nondisjunctive_variant(p);
    const Program* subjects[] = {&p, &q};
    for (const Program* subject : subjects) {
        if (subject == &p && !is_hef(p, o.guard)) continue;
        for (const AtomSet& x : models_of(*subject))
            if (is_stable(*subject, x) != is_inherently_tight(*subject, x))
                return "model " + show(*subject, x) +
                       ": stability and inherent tightness disagree on an HEF program";
    }
    return std::nullopt;
}

Detail prop_inherent_tightness_fixpoint_oracle(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 6) || p.rules().size() > 8) return std::nullopt;
    const std::size_t n = p.rules().size();
    // Tightness per rule subset, computed once.
    std::vector<Program> subs;
    subs.reserve(std::size_t{1} << n);
    std::vector<bool> tight(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Rule> rules;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) rules.push_back(p.rules()[i]);
        subs.push_back(p.with_rules(std::move(rules)));
        tight[mask] = is_tight(subs.back());
    }
    for (const AtomSet& x : interpretations(p)) {
        bool oracle = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !oracle; ++mask)
            oracle = tight[mask] && is_supported(subs[mask], x);
        if (is_inherently_tight(p, x) != oracle)
            return "x=" + show(p, x) + ": fixpoint decision disagrees with rule-subset oracle";
    }
    return std::nullopt;
}

// ---- stability -----------------------------------------------------

Detail prop_r_omega_sweeps(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 7)) return std::nullopt;
    // Fixpoints and unfoundedness per subset, computed once per x;
    // monotonicity and containment are then pair scans.
    std::vector<AtomSet> subsets;
    for_each_subset(p.atoms(), [&](const AtomSet& y) {
        subsets.push_back(y);
        return true;
    });
    for (const AtomSet& x : interpretations(p)) {
        std::vector<AtomSet> fix(subsets.size());
        std::vector<bool> unfounded(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            fix[i] = r_omega(p, x, subsets[i]);
            unfounded[i] = is_unfounded(p, subsets[i], x);
        }
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                if (!subsets[i].subset_of(subsets[j])) continue;
                if (!fix[i].subset_of(fix[j]))
                    return "R-operator is not monotone under x=" + show(p, x) + " for " +
                           show(p, subsets[i]) + " inside " + show(p, subsets[j]);
                if (!subsets[i].empty() && unfounded[i] && !subsets[i].subset_of(fix[j]))
                    return "unfounded subset " + show(p, subsets[i]) + " escapes R-omega of " +
                           show(p, subsets[j]) + " under x=" + show(p, x);
            }
        }
    }
    return std::nullopt;
}

Detail prop_r_removal_footnote_equivalence(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 7)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool ok = for_each_subset(x, [&](const AtomSet& y) {
            return r_omega(p, x, y) == r_omega_footnote(p, x, y);
        });
        if (!ok) return "footnote removal condition changes R-omega under x=" + show(p, x);
    }
    return std::nullopt;
}

Detail prop_bounding_loops_disjoint(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        auto bl = compute_bounding_loops(p, x);
        for (std::size_t i = 0; i < bl.size(); ++i) {
            if (!(r_omega(p, x, bl[i]) == bl[i]) || !is_loop(restrict_xy(p, x, bl[i]), bl[i]))
                return "x=" + show(p, x) + ": " + show(p, bl[i]) + " is not a bounding loop";
            for (std::size_t j = i + 1; j < bl.size(); ++j)
                if (bl[i].intersects(bl[j]))
                    return "x=" + show(p, x) + ": bounding loops " + show(p, bl[i]) + " and " +
                           show(p, bl[j]) + " overlap";
        }
    }
    return std::nullopt;
}

Detail prop_bounding_loops_cover_candidates(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 7)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        auto bl = compute_bounding_loops(p, x);
        bool ok = for_each_subset(x, [&](const AtomSet& z) {
            if (z.empty() || !(r_omega(p, x, z) == z)) return true;
            if (!is_loop(restrict_xy(p, x, z), z)) return true;
            return std::any_of(bl.begin(), bl.end(),
                               [&](const AtomSet& b) { return z.subset_of(b); });
        });
        if (!ok)
            return "x=" + show(p, x) +
                   ": an R-fixpoint loop of its relevant subprogram escapes every bounding loop";
    }
    return std::nullopt;
}

Detail prop_r_omega_soundness(const Program& p, const VerifyOptions&) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        if (!r_omega(p, x, x).empty()) continue;
        bool ok = for_each_subset(x, [&](const AtomSet& z) {
            return z.empty() || !is_unfounded(p, z, x);
        });
        if (!ok)
            return "x=" + show(p, x) + ": empty R-fixpoint but a nonempty unfounded subset exists";
    }
    return std::nullopt;
}

Detail prop_eus_within_bounding(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        auto bl = compute_bounding_loops(p, x);
        for (const AtomSet& y : elementarily_unfounded_sets(p, x, o.guard)) {
            if (y.is_singleton()) continue;
            bool inside = std::any_of(bl.begin(), bl.end(),
                                      [&](const AtomSet& b) { return y.subset_of(b); });
            if (!inside)
                return "x=" + show(p, x) + ": eus " + show(p, y) + " outside every bounding loop";
        }
    }
    return std::nullopt;
}

Detail prop_theorem7_hef_completeness(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8) || !is_hef(p, o.guard)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool by_r = unfounded_free_by_r(p, x);
        bool free = for_each_subset(
            x, [&](const AtomSet& z) { return z.empty() || !is_unfounded(p, z, x); });
        if (by_r != free)
            return "x=" + show(p, x) + ": R-based unfounded-freeness says " +
                   (by_r ? "free" : "not free") + ", subset scan says " +
                   (free ? "free" : "not free");
    }
    return std::nullopt;
}

Detail prop_corollary2_hef_stability(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8) || !is_hef(p, o.guard)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool expected = is_model(x, p) && r_omega(p, x, x).empty();
        if (is_stable(p, x) != expected)
            return "x=" + show(p, x) + ": stability and model+empty-R disagree on an HEF program";
    }
    return std::nullopt;
}

Detail prop_modular_stability(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : models_of(p))
        if (modular_stable_check(p, x, o.guard) != is_stable(p, x))
            return "model " + show(p, x) + ": modular check disagrees with is_stable";
    return std::nullopt;
}

Detail prop_hef_subprogram_unfounded(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 8)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        for (const AtomSet& y : compute_bounding_loops(p, x)) {
            if (!is_hef(restrict_xy(p, x, y), o.guard)) continue;
            bool found = !for_each_subset(y, [&](const AtomSet& z) {
                return z.empty() || !is_unfounded(p, z, x);
            });
            if (!found)
                return "x=" + show(p, x) + ": HEF-subprogram bounding loop " + show(p, y) +
                       " has no unfounded subset";
        }
    }
    return std::nullopt;
}

Detail prop_theorem4_gadget_equivalence(const Program& p, const VerifyOptions& o) {
    if (!atoms_within(p, 7)) return std::nullopt;
    for (const AtomSet& x : interpretations(p)) {
        bool free = for_each_subset(
            x, [&](const AtomSet& z) { return z.empty() || !is_unfounded(p, z, x); });
        auto [gadget, e] = unfoundedfree_reduction(p, x);
        bool elem = is_elementary_loop_definitional(gadget, x.with(e.index), o.guard);
        if (free != elem)
            return "x=" + show(p, x) + ": unfounded-freeness=" + (free ? "yes" : "no") +
                   " but gadget elementarity=" + (elem ? "yes" : "no");
    }
    return std::nullopt;
}

} // namespace

const std::vector<PropertyCheck>& property_suite() {
    static const std::vector<PropertyCheck> suite = {
        {"render_parse_roundtrip", prop_render_parse_roundtrip},
        {"is_stable_matches_full_enumeration", prop_is_stable_matches_full_enumeration},
        {"stable_models_are_models", prop_stable_models_are_models},
        {"stable_models_are_supported", prop_stable_models_are_supported},
        {"prop_subset_rule_monotonicity", prop_subset_rule_monotonicity},
        {"reduct_idempotent", prop_reduct_idempotent},
        {"loops_match_alternative_definition", prop_loops_match_alternative},
        {"elementary_subgraph_within_dependency", prop_elementary_subgraph_within_dependency},
        {"theorem3_elementary_subgraph_agreement", prop_theorem3_subgraph_agreement},
        {"singletons_are_elementary", prop_singletons_are_elementary},
        {"elementary_loops_are_loops", prop_elementary_loops_are_loops},
        {"propd2_external_support_lifting", prop_external_support_lifting},
        {"propd3_elementary_alternative", prop_elementary_alternative},
        {"propd4_loop_formula_entailment", prop_loop_formula_entailment},
        {"prop_gs_equivalence", prop_gs_equivalence},
        {"prop6_shift_preserves_elementary", prop_shift_preserves_elementary},
        {"prop7_shift_restriction_elementary", prop_shift_restriction_elementary},
        {"restriction_elementary_equivalence", prop_restriction_elementary_equivalence},
        {"theorem1_criteria_agreement", prop_theorem1_criteria_agreement},
        {"theorem2_minimal_unfounded_equivalence", prop_theorem2_minimal_unfounded},
        {"corollary1_antichain", prop_corollary1_antichain},
        {"propd5_relevant_elementary_subsets_supported",
         prop_relevant_elementary_subsets_supported},
        {"eus_elementary_and_unfounded", prop_eus_elementary_and_unfounded},
        {"prop8_tight_iff_e_tight", prop_tight_iff_e_tight},
        {"hcf_implies_hef", prop_hcf_implies_hef},
        {"theorem5_shift_equivalence", prop_theorem5_shift_equivalence},
        {"prop9_inherent_tight_implies_stable", prop_inherent_tight_implies_stable},
        {"theorem6_inherent_tightness_biconditional", prop_theorem6_inherent_tightness},
        {"inherent_tightness_fixpoint_oracle", prop_inherent_tightness_fixpoint_oracle},
        {"prop11_and_r_monotonicity", prop_r_omega_sweeps},
        {"r_removal_footnote_equivalence", prop_r_removal_footnote_equivalence},
        {"prop11b_bounding_loops_disjoint", prop_bounding_loops_disjoint},
        {"bounding_loops_cover_candidates", prop_bounding_loops_cover_candidates},
        {"prop12_r_omega_soundness", prop_r_omega_soundness},
        {"prop12b_eus_within_bounding", prop_eus_within_bounding},
        {"theorem7_hef_r_omega_completeness", prop_theorem7_hef_completeness},
        {"corollary2_hef_stability", prop_corollary2_hef_stability},
        {"prop13_modular_stability", prop_modular_stability},
        {"prop14_hef_subprogram_unfounded", prop_hef_subprogram_unfounded},
        {"theorem4_gadget_equivalence", prop_theorem4_gadget_equivalence},
    };
    return suite;
}

std::optional<PropertyViolation> check_properties(const Program& p, const VerifyOptions& opts) {
    for (const PropertyCheck& check : property_suite())
        if (auto detail = check.run(p, opts)) return PropertyViolation{check.name, *detail};
    return std::nullopt;
}

std::optional<std::string> run_property(const std::string& name, const Program& p,
                                        const VerifyOptions& opts) {
    for (const PropertyCheck& check : property_suite())
        if (name == check.name) return check.run(p, opts);
    return std::nullopt;
}

namespace {

Program drop_rule(const Program& p, std::size_t idx) {
    std::vector<Rule> rules = p.rules();
    rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(idx));
    return p.with_rules(std::move(rules));
}

Program erase_atom(const Program& p, AtomIndex a) {
    std::vector<Rule> rules;
    rules.reserve(p.rules().size());
    for (Rule r : p.rules()) {
        r.head.remove(a);
        r.pos.remove(a);
        r.neg.remove(a);
        r.dneg.remove(a);
        rules.push_back(std::move(r));
    }
    return p.with_rules(std::move(rules));
}

bool still_violates(const Program& p, const std::string& property, const VerifyOptions& opts) {
    try {
        return run_property(property, p, opts).has_value();
    } catch (const std::exception&) {
        return false; // do not shrink into configurations the check rejects
    }
}

} // namespace

Program minimize_counterexample(Program p, const std::string& property,
                                const VerifyOptions& opts) {
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < p.rules().size(); ++i) {
            Program q = drop_rule(p, i);
            if (still_violates(q, property, opts)) {
                p = std::move(q);
                shrunk = true;
                break;
            }
        }
        if (shrunk) continue;
        for (AtomIndex a : p.atoms()) {
            Program q = erase_atom(p, a);
            if (still_violates(q, property, opts)) {
                p = std::move(q);
                shrunk = true;
                break;
            }
        }
    }
    return p;
}

VerifyReport verify_random_programs(std::uint64_t seed, std::uint64_t count,
                                    const GeneratorOptions& gen, const VerifyOptions& opts) {
    VerifyReport report;
    for (std::uint64_t k = 0; k < count; ++k) {
        Program p = random_program(seed, k, gen);
        if (auto violation = check_properties(p, opts)) {
            report.ok = false;
            report.instances = k + 1;
            report.violation = violation;
            report.counterexample = minimize_counterexample(p, violation->property, opts);
            return report;
        }
    }
    report.instances = count;
    return report;
}

} // namespace elp

#ifndef ELP_CLASSIFY_HPP
#define ELP_CLASSIFY_HPP

#include <optional>
#include <utility>

#include "elp/errors.hpp"
#include "elp/program.hpp"

namespace elp {

struct ClassViolation {
    std::size_t rule; // index into Program::rules()
    AtomSet loop;
};

/// Program-class predicates; a false predicate carries one witnessing
/// (rule, loop) pair. hef is absent when the atom count defeats the
/// enumeration guard.
struct ClassReport {
    bool tight = false;
    bool e_tight = false; // always equals tight
    bool hcf = false;
    std::optional<bool> hef;
    std::optional<ClassViolation> tight_witness;
    std::optional<ClassViolation> hcf_witness;
    std::optional<ClassViolation> hef_witness;
};

/// Every loop is trivial: no dependency self-edge and no SCC of size
/// two or more.
bool is_tight(const Program& p);

/// Every elementary loop is trivial; coincides with is_tight and is
/// answered that way.
bool is_e_tight(const Program& p);

/// Enumeration route for the equivalence check: inspects every
/// elementary loop. Guarded.
bool is_e_tight_by_enumeration(const Program& p, std::size_t guard = default_guard);

/// No rule head meets a loop in more than one atom; decided in
/// polynomial time via SCCs.
bool is_hcf(const Program& p);

/// No rule head meets an elementary loop in more than one atom;
/// requires elementary-loop enumeration (guarded).
bool is_hef(const Program& p, std::size_t guard = default_guard);

/// As is_hef, reporting the smallest violating elementary loop in
/// canonical order together with an offending rule.
std::pair<bool, std::optional<ClassViolation>> hef_check(const Program& p,
                                                         std::size_t guard = default_guard);

ClassReport classify(const Program& p, std::size_t guard = default_guard);

/// Shifted variant: each rule with k > 1 head atoms becomes k rules,
/// one per head atom, with the remaining head atoms negated in the
/// body. Replacement rules sit at the original rule's position in
/// head-atom order.
Program shift(const Program& p);

/// Fixpoint decision for the existence of a tight rule subset
/// supporting x: derive atoms of x one at a time through rules of the
/// x-relevant subprogram whose head meets x exactly in the derived atom
/// and whose positive body is already derived.
bool is_inherently_tight(const Program& p, const AtomSet& x);

/// Reduction gadget: x is unfounded-free for p w.r.t. x iff
/// x ∪ {e} is an elementary loop of the returned program. The fresh
/// atom e appends every rule body of the x-relevant subprogram and is
/// derivable from every atom of x ∪ {e}.
std::pair<Program, Atom> unfoundedfree_reduction(const Program& p, const AtomSet& x);

} // namespace elp

#endif

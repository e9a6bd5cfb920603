#ifndef ELP_STABILITY_HPP
#define ELP_STABILITY_HPP

#include <optional>
#include <vector>

#include "elp/errors.hpp"
#include "elp/program.hpp"

namespace elp {

/// Limit of the shrinking sequence starting from y: each step removes,
/// simultaneously, every atom a that some rule of the x-relevant
/// subprogram supports with head∩(x∪{a}) = {a} and positive body
/// disjoint from the step's starting set.
AtomSet r_omega(const Program& p, const AtomSet& x, const AtomSet& y);

/// r_omega(p,x,x) is empty. Sound for every program; complete when p is
/// HEF. Requires x ⊆ atoms(p).
bool unfounded_free_by_r(const Program& p, const AtomSet& x);

struct BoundingLoopInfo {
    AtomSet atoms;
    /// Whether the loop-relevant subprogram is HEF; absent when the
    /// enumeration guard was exceeded.
    std::optional<bool> hef_subprogram;
    /// Smallest nonempty unfounded subset in canonical order; absent if
    /// none, or if the loop is too large to scan within the guard.
    std::optional<AtomSet> unfounded_witness;
};

/// Maximal subsets Z of x that are loops of the Z-relevant subprogram
/// with R-fixpoint Z; pairwise disjoint, canonically ordered.
struct BoundingLoopReport {
    std::vector<BoundingLoopInfo> loops;
};

std::vector<AtomSet> compute_bounding_loops(const Program& p, const AtomSet& x);
BoundingLoopReport bounding_loops(const Program& p, const AtomSet& x,
                                  std::size_t guard = default_guard);

/// x is supported and no bounding loop contains a nonempty unfounded
/// set. Per loop, an HEF subprogram settles the question immediately;
/// otherwise the loop is scanned, or the check falls back to the
/// whole-x unfounded-set criterion. Requires x to be a model of p.
bool modular_stable_check(const Program& p, const AtomSet& x, std::size_t guard = default_guard);

/// Comparison baseline: maximal loops of the subprogram relevant to
/// R-omega of x (no stability claims attached).
std::vector<AtomSet> baseline_maximal_loops(const Program& p, const AtomSet& x);

} // namespace elp

#endif

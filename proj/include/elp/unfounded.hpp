#ifndef ELP_UNFOUNDED_HPP
#define ELP_UNFOUNDED_HPP

#include <optional>
#include <string>
#include <vector>

#include "elp/errors.hpp"
#include "elp/program.hpp"

namespace elp {

/// The seven equivalent stability conditions for a model over the
/// occurring atoms:
///   A      x is stable (reduct minimality),
///   B      loop formulas of all nonempty occurring sets hold,
///   Bprime x contains no nonempty unfounded set,
///   C      loop formulas of all loops hold,
///   D      loop formulas of all elementary loops hold,
///   E      loop formulas of maximal relevant elementary loops and all
///          occurring singletons hold,
///   Eprime x contains no elementarily unfounded set.
enum class StabilityCriterion { A, B, Bprime, C, D, E, Eprime };

const char* criterion_name(StabilityCriterion c);
std::optional<StabilityCriterion> criterion_from_name(std::string_view name);
inline constexpr StabilityCriterion all_criteria[] = {
    StabilityCriterion::A, StabilityCriterion::B,      StabilityCriterion::Bprime,
    StabilityCriterion::C, StabilityCriterion::D,      StabilityCriterion::E,
    StabilityCriterion::Eprime};

/// x satisfies the external support formula of y: some rule has a head
/// atom in y, positive body disjoint from y, body true under x, and no
/// head atom outside y true in x.
bool externally_supported(const Program& p, const AtomSet& y, const AtomSet& x);

/// Loop formula /\y -> ES(y) evaluated at x; y must be nonempty.
bool loop_formula_holds(const Program& p, const AtomSet& y, const AtomSet& x);

bool is_unfounded(const Program& p, const AtomSet& y, const AtomSet& x);

/// y is an unfounded singleton, or an elementary loop of the
/// y-relevant subprogram that is unfounded. Requires nonempty
/// y ⊆ atoms(p).
bool is_elementarily_unfounded(const Program& p, const AtomSet& y, const AtomSet& x,
                               std::size_t guard = default_guard);

/// All elementarily unfounded sets for p w.r.t. x, canonically ordered.
std::vector<AtomSet> elementarily_unfounded_sets(const Program& p, const AtomSet& x,
                                                 std::size_t guard = default_guard);

/// Brute-force oracle: minimal nonempty unfounded subsets of atoms(p)
/// w.r.t. x. Coincides with elementarily_unfounded_sets.
std::vector<AtomSet> minimal_unfounded_sets(const Program& p, const AtomSet& x,
                                            std::size_t guard = default_guard);

struct CriterionResult {
    bool holds;
    /// For a failed criterion: the offending set (failing loop formula,
    /// unfounded set, or smaller model of the reduct), in canonical
    /// enumeration order.
    std::optional<AtomSet> witness;
};

/// Evaluates one stability condition for a model x over the occurring
/// atoms; throws PreconditionViolated when x is not a model or has
/// stray atoms.
CriterionResult stable_via_witness(const Program& p, const AtomSet& x, StabilityCriterion c,
                                   std::size_t guard = default_guard);
bool stable_via(const Program& p, const AtomSet& x, StabilityCriterion c,
                std::size_t guard = default_guard);

/// Human-readable formula text for debugging (not load-bearing).
std::string external_support_formula_text(const Program& p, const AtomSet& y);
std::string loop_formula_text(const Program& p, const AtomSet& y);

} // namespace elp

#endif

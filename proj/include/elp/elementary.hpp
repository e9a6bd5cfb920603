#ifndef ELP_ELEMENTARY_HPP
#define ELP_ELEMENTARY_HPP

#include <vector>

#include "elp/errors.hpp"
#include "elp/graph.hpp"
#include "elp/program.hpp"

namespace elp {

/// Which decision procedure is_elementary_loop uses.
///  - Auto: elementary subgraph when the program is nondisjunctive,
///    subset enumeration otherwise.
///  - Definitional: always subset enumeration (sound for any program).
///  - Subgraph: always the elementary-subgraph test; sound only for
///    nondisjunctive/HEF programs (CLI --assume-hef).
enum class ElementaryMode { Auto, Definitional, Subgraph };

/// Some rule supports y from within x\y: head meets y, positive body
/// meets x\y, head avoids x\y and positive body avoids y. Requires
/// y ⊆ x.
bool is_outbound(const Program& p, const AtomSet& y, const AtomSet& x);

/// x is nonempty, occurs in p, and every nonempty proper subset of x is
/// outbound in x.
bool is_elementary_loop(const Program& p, const AtomSet& x, std::size_t guard = default_guard,
                        ElementaryMode mode = ElementaryMode::Auto);

/// Subset-enumeration route: nonempty proper subsets checked in
/// ascending cardinality, early exit on the first non-outbound one.
bool is_elementary_loop_definitional(const Program& p, const AtomSet& x,
                                     std::size_t guard = default_guard);

/// Elementary-subgraph route: strong connectivity of the fixpoint
/// subgraph. Agrees with the definition on nondisjunctive and HEF
/// programs.
bool is_elementary_loop_via_subgraph(const Program& p, const AtomSet& x);

std::vector<AtomSet> elementary_loops(const Program& p, std::size_t guard = default_guard,
                                      ElementaryMode mode = ElementaryMode::Auto);

/// Rules that can provide support for y w.r.t. x: the body holds under
/// x and no head atom outside y is true in x.
Program restrict_xy(const Program& p, const AtomSet& x, const AtomSet& y);
inline Program restrict_x(const Program& p, const AtomSet& x) { return restrict_xy(p, x, x); }

/// l = {a} with a occurring in p and no rule has a in both head and
/// positive body.
bool is_trivial_loop(const Program& p, const AtomSet& l);

/// The earlier loop-based formulation kept for comparison: l is a
/// nontrivial loop and every nontrivial-loop proper subset l' admits a
/// rule with head in l', positive body disjoint from l' but meeting l.
/// Nondisjunctive programs only; equals nontrivial elementary loops.
bool is_gs_elementary(const Program& p, const AtomSet& l);

} // namespace elp

#endif

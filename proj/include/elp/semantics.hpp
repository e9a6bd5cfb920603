#ifndef ELP_SEMANTICS_HPP
#define ELP_SEMANTICS_HPP

#include <vector>

#include "elp/errors.hpp"
#include "elp/program.hpp"

namespace elp {

/// x satisfies head <- pos, not neg, not not dneg read as the formula
/// pos & ~neg & ~~dneg -> \/ head.
bool satisfies_rule(const AtomSet& x, const Rule& r);

bool is_model(const AtomSet& x, const Program& p);

/// Deletes every rule whose negative or doubly-negated body fails under
/// x and strips neg/dneg from the survivors; source order preserved.
Program reduct(const Program& p, const AtomSet& x);

/// x satisfies reduct(p,x) and no proper subset of x does.
bool is_stable(const Program& p, const AtomSet& x);

/// All stable models of p, canonically ordered. Enumerates subsets of
/// atoms(p); throws GuardExceeded when |atoms(p)| > guard.
std::vector<AtomSet> stable_models(const Program& p, std::size_t guard = default_guard);

/// Every atom of x has a rule in the body-satisfied subprogram whose
/// head meets x in exactly that atom.
bool is_supported(const Program& p, const AtomSet& x);

} // namespace elp

#endif

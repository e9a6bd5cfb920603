#ifndef ELP_PROGRAM_HPP
#define ELP_PROGRAM_HPP

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elp/atoms.hpp"

namespace elp {

struct Atom {
    AtomIndex index;
    std::string name;
};

/// Disjunctive rule  head <- pos, not neg, not not dneg.
/// An empty head is a constraint. Components are sets; overlaps between
/// pos/neg/dneg are permitted.
struct Rule {
    AtomSet head;
    AtomSet pos;
    AtomSet neg;
    AtomSet dneg;

    bool operator==(const Rule&) const = default;

    AtomSet occurring() const {
        return head.unite(pos).unite(neg).unite(dneg);
    }
};

/// Ordered rule sequence plus the name<->index table. Immutable after
/// construction; derived programs (reduct, shift, restrictions) share
/// the table.
class Program {
public:
    Program();
    Program(std::shared_ptr<const AtomTable> table, std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    const AtomTable& table() const { return *table_; }
    const std::shared_ptr<const AtomTable>& table_ptr() const { return table_; }

    /// Atoms textually occurring in some rule (head or any body part).
    const AtomSet& atoms() const { return occurring_; }

    /// Every rule has exactly one head atom and no doubly-negated body.
    bool nondisjunctive() const { return nondisjunctive_; }

    const std::string& atom_name(AtomIndex i) const { return table_->name(i); }

    Program with_rules(std::vector<Rule> rules) const {
        return Program(table_, std::move(rules));
    }

    bool operator==(const Program& other) const {
        return rules_ == other.rules_ && *table_ == *other.table_;
    }

private:
    std::shared_ptr<const AtomTable> table_;
    std::vector<Rule> rules_;
    AtomSet occurring_;
    bool nondisjunctive_;
};

/// Incremental construction with name interning; atom indices follow
/// first-use order.
class ProgramBuilder {
public:
    AtomIndex atom(std::string_view name) { return table_.intern(name); }
    void add(Rule r) { rules_.push_back(std::move(r)); }
    Program finish() {
        return Program(std::make_shared<AtomTable>(std::move(table_)), std::move(rules_));
    }

private:
    AtomTable table_;
    std::vector<Rule> rules_;
};

/// Structural equality up to a renaming of atoms: rule i of a maps to
/// rule i of b with every component equal under the name bijection.
bool equal_modulo_renaming(const Program& a, const Program& b);

} // namespace elp

#endif

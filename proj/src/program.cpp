#include "elp/program.hpp"

namespace elp {

Program::Program() : table_(std::make_shared<AtomTable>()), nondisjunctive_(true) {}

Program::Program(std::shared_ptr<const AtomTable> table, std::vector<Rule> rules)
    : table_(std::move(table)), rules_(std::move(rules)), nondisjunctive_(true) {
    for (const Rule& r : rules_) {
        occurring_ = occurring_.unite(r.occurring());
        if (r.head.size() != 1 || !r.dneg.empty()) nondisjunctive_ = false;
    }
}

bool equal_modulo_renaming(const Program& a, const Program& b) {
    if (a.rules().size() != b.rules().size()) return false;
    auto mapped = [&](const AtomSet& s) {
        std::vector<AtomIndex> out;
        out.reserve(s.size());
        for (AtomIndex i : s) {
            auto j = b.table().find(a.atom_name(i));
            if (!j) return AtomSet{}; // unmappable name: mismatch via size check below
            out.push_back(*j);
        }
        return AtomSet::from_unsorted(std::move(out));
    };
    auto same = [&](const AtomSet& x, const AtomSet& y) {
        AtomSet m = mapped(x);
        return m.size() == x.size() && m == y;
    };
    for (std::size_t i = 0; i < a.rules().size(); ++i) {
        const Rule& ra = a.rules()[i];
        const Rule& rb = b.rules()[i];
        if (!same(ra.head, rb.head) || !same(ra.pos, rb.pos) || !same(ra.neg, rb.neg) ||
            !same(ra.dneg, rb.dneg))
            return false;
    }
    return true;
}

} // namespace elp

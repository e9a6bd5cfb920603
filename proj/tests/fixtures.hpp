#ifndef ELP_TESTS_FIXTURES_HPP
#define ELP_TESTS_FIXTURES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "elp/parser.hpp"
#include "elp/program.hpp"

namespace fixtures {

// Worked examples used throughout the suite.
inline constexpr const char* pi1 = "p :- not s.  p :- r.  q :- r.  r :- p, q.";
inline constexpr const char* ex2 = "p :- not s.  p :- r.  q :- r.  r :- p.  r :- q.";
inline constexpr const char* ex_uf = "p ; q :- r.  p ; r :- q.  q ; r :- p.";
inline constexpr const char* two_models = "p :- q, not p.  q :- p, not p.  p.";
inline constexpr const char* pair_cycle = "p :- q, not r.  q :- p, not r.";
inline constexpr const char* pi2 = "p :- r.  q :- r.  r :- p, q.  p ; q.";
inline constexpr const char* pi3 = "p ; q :- r.  r :- p.  r :- q.";
inline constexpr const char* disj_pair = "p :- q.  q :- p.  p ; q.";
inline constexpr const char* pi4 =
    "p :- r.  q :- r.  r :- p, q."
    "  s :- p.  s :- t.  t :- s, u."
    "  p ; q :- u.  s ; t :- q.  r ; u :- t.  u ; v.";

inline elp::Program parse(const char* text) { return elp::parse_program(text, "<fixture>"); }

// Atom set from comma-separated names; every name must already be in
// the table.
inline elp::AtomSet set(const elp::Program& p, const std::string& csv) {
    elp::AtomSet out;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ','))
        if (!name.empty()) out.add(p.table().find(name).value());
    return out;
}

inline std::vector<elp::AtomSet> sets(const elp::Program& p,
                                      const std::vector<std::string>& csvs) {
    std::vector<elp::AtomSet> out;
    for (const auto& csv : csvs) out.push_back(csv.empty() ? elp::AtomSet{} : set(p, csv));
    return out;
}

} // namespace fixtures

#endif

#include <doctest.h>

#include <algorithm>

#include "elp/parser.hpp"
#include "elp/semantics.hpp"
#include "fixtures.hpp"

using namespace elp;
using fixtures::parse;
using fixtures::set;
using fixtures::sets;

namespace {

// Independent truth-table oracle: evaluate the rule as the implication
// over literal values instead of via set algebra.
bool formula_oracle(const AtomSet& x, const Rule& r) {
    bool body = true;
    for (AtomIndex a : r.pos) body = body && x.contains(a);
    for (AtomIndex a : r.neg) body = body && !x.contains(a);
    for (AtomIndex a : r.dneg) body = body && !!x.contains(a);
    bool head = false;
    for (AtomIndex a : r.head) head = head || x.contains(a);
    return !body || head;
}

std::vector<AtomSet> all_models(const Program& p) {
    std::vector<AtomSet> out;
    for_each_subset(p.atoms(), [&](const AtomSet& x) {
        if (is_model(x, p)) out.push_back(x);
        return true;
    });
    canonicalize(out);
    return out;
}

} // namespace

TEST_CASE("occurring atoms cover every rule part") {
    Program p4 = parse(fixtures::pi4);
    CHECK(p4.atoms() == set(p4, "p,q,r,s,t,u,v"));
    Program d = parse("a :- not not b.");
    CHECK(d.atoms().size() == 2); // b occurs only under double negation
    CHECK(parse("").atoms().empty());
}

TEST_CASE("rule satisfaction matches the formula oracle") {
    for (const char* text : {fixtures::pi1, fixtures::ex_uf, fixtures::pi4, fixtures::two_models}) {
        Program p = parse(text);
        for_each_subset(p.atoms(), [&](const AtomSet& x) {
            for (const Rule& r : p.rules()) CHECK(satisfies_rule(x, r) == formula_oracle(x, r));
            return true;
        });
    }
}

TEST_CASE("rule satisfaction basics") {
    Program p = parse(fixtures::pi1);
    CHECK(satisfies_rule(set(p, "p"), p.rules()[0]));
    CHECK(satisfies_rule(set(p, "p,q,r"), p.rules()[3]));
    CHECK_FALSE(satisfies_rule(set(p, "p,q"), p.rules()[3]));
}

TEST_CASE("pi1 has exactly the six models from the worked example") {
    Program p = parse(fixtures::pi1);
    CHECK(is_model(set(p, "q,s"), p));
    auto expected = sets(p, {"p", "s", "p,s", "q,s", "p,q,r", "p,q,r,s"});
    canonicalize(expected);
    CHECK(all_models(p) == expected);
}

TEST_CASE("any set is a model of the empty program") {
    Program p = parse("");
    CHECK(is_model(AtomSet{}, p));
    CHECK(is_stable(p, AtomSet{}));
}

TEST_CASE("the empty set is the only stable model of the disjunctive cycle program") {
    Program p = parse(fixtures::ex_uf);
    CHECK(is_model(AtomSet{}, p));
    auto expected = sets(p, {"", "p,q", "p,r", "q,r", "p,q,r"});
    canonicalize(expected);
    CHECK(all_models(p) == expected);
    CHECK(stable_models(p) == std::vector<AtomSet>{AtomSet{}});
}

TEST_CASE("reduct deletes by negative body and strips it") {
    Program p = parse(fixtures::pi1);
    SUBCASE("x = {p}: all rules survive, first becomes a fact") {
        Program r = reduct(p, set(p, "p"));
        CHECK(render_program(r) == "p.\np :- r.\nq :- r.\nr :- p, q.\n");
    }
    SUBCASE("x = {p,s}: first rule deleted") {
        Program r = reduct(p, set(p, "p,s"));
        CHECK(render_program(r) == "p :- r.\nq :- r.\nr :- p, q.\n");
    }
    SUBCASE("positive programs are fixed points") {
        Program pos = parse("a :- b.  b ; c :- a.");
        for_each_subset(pos.atoms(), [&](const AtomSet& x) {
            CHECK(reduct(pos, x) == pos);
            return true;
        });
    }
    SUBCASE("double negation deletes when unsupported by x") {
        Program d = parse("a :- not not b.");
        CHECK(reduct(d, set(d, "b")).rules().size() == 1);
        CHECK(reduct(d, AtomSet{}).rules().empty());
    }
}

TEST_CASE("stable models of the worked examples") {
    Program p1 = parse(fixtures::pi1);
    CHECK(stable_models(p1) == sets(p1, {"p"}));
    Program p2 = parse(fixtures::pi2);
    CHECK(stable_models(p2) == sets(p2, {"p", "q"}));
}

TEST_CASE("is_stable on the two-model program") {
    Program p = parse(fixtures::two_models);
    CHECK(all_models(p) == sets(p, {"p", "p,q"}));
    CHECK(is_stable(p, set(p, "p")));
    CHECK_FALSE(is_stable(p, set(p, "p,q")));
    CHECK_FALSE(is_stable(parse(fixtures::pi1), set(parse(fixtures::pi1), "p,q,r")));
}

TEST_CASE("stable_models refuses oversized programs") {
    ProgramBuilder b;
    for (int i = 0; i < 21; ++i) {
        Rule r;
        r.head.add(b.atom("a" + std::to_string(i)));
        b.add(r);
    }
    Program p = b.finish();
    CHECK_THROWS_AS(stable_models(p), GuardExceeded);
    CHECK(stable_models(p, 21).size() == 1);
}

TEST_CASE("supportedness") {
    Program p1 = parse(fixtures::pi1);
    CHECK(is_supported(p1, set(p1, "p")));
    CHECK(is_supported(p1, AtomSet{}));
    Program d = parse(fixtures::disj_pair);
    CHECK(is_supported(d, set(d, "p,q")));
    Program p2 = parse(fixtures::pi2);
    CHECK_FALSE(is_supported(p2, set(p2, "p,q")));
}

TEST_CASE("every stable model is a supported model") {
    for (const char* text :
         {fixtures::pi1, fixtures::ex2, fixtures::ex_uf, fixtures::pi2, fixtures::pi4}) {
        Program p = parse(text);
        for (const AtomSet& x : stable_models(p)) {
            CHECK(is_model(x, p));
            CHECK(is_supported(p, x));
        }
    }
}

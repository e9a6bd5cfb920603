#include <doctest.h>

#include "elp/classify.hpp"
#include "elp/elementary.hpp"
#include "elp/unfounded.hpp"
#include "elp/parser.hpp"
#include "elp/semantics.hpp"
#include "fixtures.hpp"

using namespace elp;
using fixtures::parse;
using fixtures::set;
using fixtures::sets;

TEST_CASE("tightness") {
    CHECK_FALSE(is_tight(parse(fixtures::pi1)));
    CHECK(is_tight(parse("p :- not q.  q :- not p.")));
    CHECK_FALSE(is_tight(parse(fixtures::ex_uf)));
    CHECK_FALSE(is_tight(parse("p :- p.")));
    CHECK(is_tight(parse("a.  b.")));
}

TEST_CASE("e-tightness coincides with tightness") {
    for (const char* text : {fixtures::pi1, fixtures::ex_uf, fixtures::pi2, fixtures::pi3,
                             "p :- not q.  q :- not p.", "a.  b."}) {
        Program p = parse(text);
        CHECK(is_e_tight(p) == is_tight(p));
        CHECK(is_e_tight_by_enumeration(p) == is_tight(p));
    }
}

TEST_CASE("head-cycle-freeness") {
    CHECK_FALSE(is_hcf(parse(fixtures::pi2)));
    CHECK(is_hcf(parse(fixtures::pi1)));
    CHECK_FALSE(is_hcf(parse(fixtures::pi3)));
    CHECK(is_hcf(parse("p ; q :- r."))); // no cycle at all
}

TEST_CASE("head-elementary-loop-freeness") {
    CHECK(is_hef(parse(fixtures::pi2)));
    CHECK(is_hef(parse(fixtures::pi3)));
    CHECK_FALSE(is_hef(parse(fixtures::disj_pair)));
    SUBCASE("the witness is the smallest violating elementary loop") {
        auto [hef, witness] = hef_check(parse(fixtures::disj_pair));
        Program p = parse(fixtures::disj_pair);
        REQUIRE_FALSE(hef);
        REQUIRE(witness.has_value());
        CHECK(witness->loop == set(p, "p,q"));
        CHECK(witness->rule == 2);
    }
    SUBCASE("nondisjunctive programs are trivially HEF") {
        CHECK(is_hef(parse(fixtures::pi1)));
    }
}

TEST_CASE("every HCF fixture is HEF") {
    for (const char* text : {fixtures::pi1, fixtures::ex2, fixtures::ex_uf, fixtures::pi2,
                             fixtures::pi3, fixtures::pi4, fixtures::disj_pair})
        if (is_hcf(parse(text))) CHECK(is_hef(parse(text)));
}

TEST_CASE("classification report") {
    ClassReport rep = classify(parse(fixtures::pi2));
    CHECK_FALSE(rep.tight);
    CHECK(rep.e_tight == rep.tight);
    CHECK_FALSE(rep.hcf);
    REQUIRE(rep.hef.has_value());
    CHECK(*rep.hef);
    CHECK(rep.tight_witness.has_value());
    CHECK(rep.hcf_witness.has_value());
    CHECK_FALSE(rep.hef_witness.has_value());
    Program p = parse(fixtures::pi2);
    CHECK(rep.hcf_witness->rule == 3);
    CHECK(rep.hcf_witness->loop == set(p, "p,q,r"));
}

TEST_CASE("shifting the HEF example reproduces the published variant") {
    Program p3 = parse(fixtures::pi3);
    CHECK(render_program(shift(p3)) == "p :- r, not q.\nq :- r, not p.\nr :- p.\nr :- q.\n");
}

TEST_CASE("shifting is the identity on nondisjunctive programs") {
    Program p = parse(fixtures::pi1);
    CHECK(shift(p) == p);
}

TEST_CASE("shifting pi2") {
    Program p = parse(fixtures::pi2);
    CHECK(render_program(shift(p)) ==
          "p :- r.\nq :- r.\nr :- p, q.\np :- not q.\nq :- not p.\n");
    CHECK(stable_models(p) == stable_models(shift(p)));
    CHECK(stable_models(p) == sets(p, {"p", "q"}));
}

TEST_CASE("shift keeps double negation and constraints") {
    Program p = parse("a ; b :- c, not not d.  :- a.");
    Program sh = shift(p);
    CHECK(render_program(sh) == "a :- c, not b, not not d.\nb :- c, not a, not not d.\n:- a.\n");
}

TEST_CASE("{p,q,r} becomes elementary after shifting pi3") {
    Program p3 = parse(fixtures::pi3);
    Program sh = shift(p3);
    CHECK_FALSE(is_elementary_loop(p3, set(p3, "p,q,r")));
    CHECK(is_elementary_loop(sh, set(sh, "p,q,r")));
}

TEST_CASE("inherent tightness") {
    Program d = parse(fixtures::disj_pair);
    CHECK(is_stable(d, set(d, "p,q")));
    CHECK_FALSE(is_inherently_tight(d, set(d, "p,q")));
    Program p1 = parse(fixtures::pi1);
    CHECK(is_inherently_tight(p1, set(p1, "p")));
    CHECK(is_inherently_tight(p1, AtomSet{}));
}

TEST_CASE("fixpoint decision agrees with the rule-subset oracle") {
    for (const char* text : {fixtures::pi1, fixtures::ex_uf, fixtures::pi2, fixtures::pi3,
                             fixtures::disj_pair, fixtures::two_models}) {
        Program p = parse(text);
        const std::size_t n = p.rules().size();
        REQUIRE(n <= 8);
        for_each_subset(p.atoms(), [&](const AtomSet& x) {
            bool oracle = false;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !oracle; ++mask) {
                std::vector<Rule> rules;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint64_t{1} << i)) rules.push_back(p.rules()[i]);
                Program sub = p.with_rules(std::move(rules));
                oracle = is_tight(sub) && is_supported(sub, x);
            }
            CHECK(is_inherently_tight(p, x) == oracle);
            return true;
        });
    }
}

TEST_CASE("stability equals inherent tightness on HEF fixtures") {
    for (const char* text : {fixtures::pi1, fixtures::ex2, fixtures::pi2, fixtures::pi3}) {
        Program p = parse(text);
        REQUIRE(is_hef(p));
        for_each_subset(p.atoms(), [&](const AtomSet& x) {
            if (is_model(x, p)) CHECK(is_stable(p, x) == is_inherently_tight(p, x));
            return true;
        });
    }
}

TEST_CASE("unfounded-freeness reduction gadget") {
    SUBCASE("no support at all") {
        Program p = parse("a :- b.");
        auto [gadget, e] = unfoundedfree_reduction(p, set(p, "a"));
        CHECK(e.name == "e");
        CHECK(render_program(gadget) == "e :- a.\ne :- e.\n");
        CHECK_FALSE(is_elementary_loop(gadget, set(p, "a").with(e.index)));
    }
    SUBCASE("stable model of pi1") {
        Program p = parse(fixtures::pi1);
        auto [gadget, e] = unfoundedfree_reduction(p, set(p, "p"));
        CHECK(is_elementary_loop(gadget, set(p, "p").with(e.index)));
    }
    SUBCASE("fresh atom dodges used names") {
        Program p = parse("e :- e1.");
        auto [gadget, e] = unfoundedfree_reduction(p, AtomSet{});
        CHECK(e.name == "e2");
    }
    SUBCASE("equivalence with unfounded-freeness on a disjunctive fixture") {
        Program p = parse(fixtures::pi2);
        for_each_subset(p.atoms(), [&](const AtomSet& x) {
            bool free = for_each_subset(x, [&](const AtomSet& z) {
                return z.empty() || externally_supported(p, z, x);
            });
            auto [gadget, e] = unfoundedfree_reduction(p, x);
            CHECK(free == is_elementary_loop(gadget, x.with(e.index)));
            return true;
        });
    }
}

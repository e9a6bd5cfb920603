#include <doctest.h>

#include <algorithm>

#include "elp/classify.hpp"
#include "elp/elementary.hpp"
#include "elp/parser.hpp"
#include "fixtures.hpp"

using namespace elp;
using fixtures::parse;
using fixtures::set;
using fixtures::sets;

TEST_CASE("outbound basics from the worked examples") {
    Program p1 = parse(fixtures::pi1);
    CHECK_FALSE(is_outbound(p1, set(p1, "p,r"), set(p1, "p,q,r")));
    CHECK_FALSE(is_outbound(p1, set(p1, "q,r"), set(p1, "p,q,r")));
    CHECK(is_outbound(p1, set(p1, "p"), set(p1, "p,r")));
    Program uf = parse(fixtures::ex_uf);
    CHECK_FALSE(is_outbound(uf, set(uf, "p"), set(uf, "p,q,r")));
    CHECK_THROWS_AS(is_outbound(p1, set(p1, "s"), set(p1, "p,r")), PreconditionViolated);
}

TEST_CASE("elementary loops of pi1") {
    Program p = parse(fixtures::pi1);
    CHECK_FALSE(is_elementary_loop(p, set(p, "p,q,r")));
    for (const char* l : {"p", "q", "r", "s", "p,r", "q,r"})
        CHECK(is_elementary_loop(p, set(p, l)));
    auto expected = sets(p, {"p", "q", "r", "s", "p,r", "q,r"});
    canonicalize(expected);
    CHECK(elementary_loops(p) == expected);
}

TEST_CASE("all loops of the split-body variant are elementary") {
    Program p = parse(fixtures::ex2);
    CHECK(is_elementary_loop(p, set(p, "p,q,r")));
    CHECK(elementary_loops(p) == loops(p));
}

TEST_CASE("elementary loops of the disjunctive cycle program") {
    Program p = parse(fixtures::ex_uf);
    CHECK_FALSE(is_elementary_loop(p, set(p, "p,q,r")));
    for (const char* l : {"p", "q", "r", "p,q", "p,r", "q,r"})
        CHECK(is_elementary_loop(p, set(p, l)));
}

TEST_CASE("elementary loop checks are total") {
    Program p = parse(fixtures::pi1);
    CHECK_FALSE(is_elementary_loop(p, AtomSet{}));
    CHECK_FALSE(is_elementary_loop(p, AtomSet{99}));
}

TEST_CASE("definitional and subgraph routes agree on nondisjunctive fixtures") {
    for (const char* text : {fixtures::pi1, fixtures::ex2, fixtures::two_models}) {
        Program p = parse(text);
        for_each_subset(p.atoms(), [&](const AtomSet& x) {
            if (!x.empty())
                CHECK(is_elementary_loop_definitional(p, x) ==
                      is_elementary_loop_via_subgraph(p, x));
            return true;
        });
    }
}

TEST_CASE("elementary loops of pi2 exclude the full loop") {
    Program p = parse(fixtures::pi2);
    auto expected = sets(p, {"p", "q", "r", "p,r", "q,r"});
    canonicalize(expected);
    CHECK(elementary_loops(p) == expected);
    Program fact = parse("a.");
    CHECK(elementary_loops(fact) == sets(fact, {"a"}));
}

TEST_CASE("relevant subprograms from the disjunctive cycle walkthrough") {
    Program p = parse(fixtures::ex_uf);
    SUBCASE("support for {p,q} w.r.t. {p,q,r} is the first rule only") {
        Program r = restrict_xy(p, set(p, "p,q,r"), set(p, "p,q"));
        REQUIRE(r.rules().size() == 1);
        CHECK(r.rules()[0] == p.rules()[0]);
        CHECK_FALSE(is_elementary_loop(r, set(p, "p,q")));
    }
    SUBCASE("support for {p,q} w.r.t. {p,q} is the last two rules") {
        Program r = restrict_x(p, set(p, "p,q"));
        REQUIRE(r.rules().size() == 2);
        CHECK(r.rules()[0] == p.rules()[1]);
        CHECK(r.rules()[1] == p.rules()[2]);
        CHECK(is_elementary_loop(r, set(p, "p,q")));
    }
}

TEST_CASE("relevant subprogram of the shifted variant") {
    Program sh = shift(parse(fixtures::pi3));
    Program r = restrict_x(sh, set(sh, "p,q,r"));
    REQUIRE(r.rules().size() == 2);
    CHECK(render_program(r) == "r :- p.\nr :- q.\n");
}

TEST_CASE("restriction keeps rules whose body holds") {
    Program p = parse(fixtures::pi1);
    Program r = restrict_x(p, set(p, "p"));
    REQUIRE(r.rules().size() == 1);
    CHECK(r.rules()[0] == p.rules()[0]);
}

TEST_CASE("trivial loops") {
    Program p = parse(fixtures::pi1);
    CHECK(is_trivial_loop(p, set(p, "s")));
    CHECK(is_trivial_loop(p, set(p, "p"))); // no self-edge on p
    CHECK_FALSE(is_trivial_loop(p, set(p, "p,r")));
    Program self = parse("p :- p.");
    CHECK_FALSE(is_trivial_loop(self, set(self, "p")));
}

TEST_CASE("GS-elementary equals nontrivial elementary on nondisjunctive programs") {
    Program p = parse(fixtures::pi1);
    CHECK_FALSE(is_gs_elementary(p, set(p, "p,q,r")));
    CHECK_FALSE(is_gs_elementary(p, set(p, "s")));
    CHECK(is_gs_elementary(p, set(p, "p,r")));
    for_each_subset(p.atoms(), [&](const AtomSet& l) {
        if (l.empty()) return true;
        CHECK(is_gs_elementary(p, l) ==
              (is_elementary_loop_definitional(p, l) && !is_trivial_loop(p, l)));
        return true;
    });
    CHECK_THROWS_AS(is_gs_elementary(parse(fixtures::ex_uf), AtomSet{0}), PreconditionViolated);
}

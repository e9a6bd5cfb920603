#include <doctest.h>

#include "elp/errors.hpp"
#include "elp/parser.hpp"
#include "fixtures.hpp"

using namespace elp;
using fixtures::parse;
using fixtures::set;

TEST_CASE("pi1 parses into four rules over p,q,r,s") {
    Program p = parse(fixtures::pi1);
    REQUIRE(p.rules().size() == 4);
    CHECK(p.table().size() == 4);
    CHECK(p.atoms() == set(p, "p,q,r,s"));
    const Rule& first = p.rules()[0];
    CHECK(first.head == set(p, "p"));
    CHECK(first.pos.empty());
    CHECK(first.neg == set(p, "s"));
    CHECK(first.dneg.empty());
    const Rule& last = p.rules()[3];
    CHECK(last.head == set(p, "r"));
    CHECK(last.pos == set(p, "p,q"));
    CHECK(p.nondisjunctive());
}

TEST_CASE("empty text is the empty program") {
    Program p = parse("");
    CHECK(p.rules().empty());
    CHECK(p.atoms().empty());
    CHECK(render_program(p).empty());
}

TEST_CASE("disjunctive heads and facts") {
    Program p = parse("p ; q :- u.  u ; v.");
    REQUIRE(p.rules().size() == 2);
    CHECK(p.rules()[0].head == set(p, "p,q"));
    CHECK(p.rules()[1].head == set(p, "u,v"));
    CHECK(p.rules()[1].pos.empty());
    CHECK(p.rules()[1].neg.empty());
    CHECK(p.rules()[1].dneg.empty());
    CHECK_FALSE(p.nondisjunctive());
}

TEST_CASE("facts may be written with an explicit arrow") {
    CHECK(parse("p ; q :- .") == parse("p ; q."));
}

TEST_CASE("constraints and double negation") {
    Program p = parse(":- a, not b, not not c.");
    REQUIRE(p.rules().size() == 1);
    CHECK(p.rules()[0].head.empty());
    CHECK(p.rules()[0].pos == set(p, "a"));
    CHECK(p.rules()[0].neg == set(p, "b"));
    CHECK(p.rules()[0].dneg == set(p, "c"));
    CHECK_FALSE(p.nondisjunctive());
}

TEST_CASE("duplicate atoms within a component collapse") {
    Program p = parse("p ; p :- q, q, not r, not r.");
    CHECK(p.rules()[0].head.size() == 1);
    CHECK(p.rules()[0].pos.size() == 1);
    CHECK(p.rules()[0].neg.size() == 1);
}

TEST_CASE("comments and whitespace are insignificant") {
    Program p = parse("% header\n  p :-\n not s. % trailing\n%only comment\n");
    REQUIRE(p.rules().size() == 1);
    CHECK(p.rules()[0].neg == set(p, "s"));
}

TEST_CASE("atom indices follow first occurrence") {
    Program p = parse("b :- a.  c :- b.");
    CHECK(p.table().find("b") == AtomIndex{0});
    CHECK(p.table().find("a") == AtomIndex{1});
    CHECK(p.table().find("c") == AtomIndex{2});
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse("p :- q"), SyntaxError);
    CHECK_THROWS_AS(parse("p :- not not not q."), SyntaxError);
    CHECK_THROWS_AS(parse("p :- 3."), SyntaxError);
    CHECK_THROWS_AS(parse("not :- p."), SyntaxError);
    CHECK_THROWS_AS(parse("p :- not."), SyntaxError);
    CHECK_THROWS_AS(parse("."), SyntaxError);
    CHECK_THROWS_AS(parse("p ; :- q."), SyntaxError);
    try {
        parse("p :- q.\nr :- ,s.");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
}

TEST_CASE("rendering is canonical") {
    Program p = parse(fixtures::pi1);
    CHECK(render_program(p) == "p :- not s.\np :- r.\nq :- r.\nr :- p, q.\n");
    Program d = parse("a :- not not b.");
    CHECK(render_program(d) == "a :- not not b.\n");
    Program c = parse(":- p.");
    CHECK(render_program(c) == ":- p.\n");
    Program f = parse("u;v.");
    CHECK(render_program(f) == "u ; v.\n");
}

TEST_CASE("render/parse round trip on all fixtures") {
    for (const char* text : {fixtures::pi1, fixtures::ex2, fixtures::ex_uf, fixtures::two_models,
                             fixtures::pair_cycle, fixtures::pi2, fixtures::pi3,
                             fixtures::disj_pair, fixtures::pi4}) {
        Program p = parse(text);
        std::string canonical = render_program(p);
        Program q = parse_program(canonical, "<roundtrip>");
        CHECK(equal_modulo_renaming(p, q));
        CHECK(render_program(q) == canonical);
    }
}

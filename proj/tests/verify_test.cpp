#include <doctest.h>

#include "elp/generate.hpp"
#include "elp/parser.hpp"
#include "elp/properties.hpp"
#include "fixtures.hpp"

using namespace elp;
using fixtures::parse;

TEST_CASE("generator is pure in the seed") {
    GeneratorOptions gen;
    for (std::uint64_t k = 0; k < 20; ++k)
        CHECK(random_program(7, k, gen) == random_program(7, k, gen));
    bool any_difference = false;
    for (std::uint64_t k = 0; k < 20 && !any_difference; ++k)
        any_difference = !(random_program(7, k, gen) == random_program(8, k, gen));
    CHECK(any_difference);
}

TEST_CASE("generator respects the size bounds") {
    GeneratorOptions gen;
    gen.pool_atoms = 4;
    gen.max_rules = 5;
    for (std::uint64_t k = 0; k < 50; ++k) {
        Program p = random_program(3, k, gen);
        CHECK(p.rules().size() >= 1);
        CHECK(p.rules().size() <= 5);
        CHECK(p.atoms().size() <= 4);
        for (const Rule& r : p.rules()) {
            CHECK(r.head.size() <= 3);
            CHECK(r.pos.size() <= 3);
            CHECK(r.neg.size() <= 3);
            CHECK(r.dneg.size() <= 3);
        }
    }
}

TEST_CASE("the property suite holds on every worked-example fixture") {
    VerifyOptions opts;
    for (const char* text : {fixtures::pi1, fixtures::ex2, fixtures::ex_uf, fixtures::two_models,
                             fixtures::pair_cycle, fixtures::pi2, fixtures::pi3,
                             fixtures::disj_pair, fixtures::pi4}) {
        auto violation = check_properties(parse(text), opts);
        if (violation)
            FAIL(violation->property << ": " << violation->detail << "\nprogram:\n" << text);
    }
}

TEST_CASE("a short randomized run passes") {
    GeneratorOptions gen;
    VerifyOptions opts;
    VerifyReport report = verify_random_programs(1, 60, gen, opts);
    if (!report.ok)
        FAIL(report.violation->property << ": " << report.violation->detail << "\nprogram:\n"
                                        << render_program(*report.counterexample));
    CHECK(report.instances == 60);
}

TEST_CASE("count zero is a no-op") {
    VerifyReport report = verify_random_programs(1, 0, GeneratorOptions{}, VerifyOptions{});
    CHECK(report.ok);
    CHECK(report.instances == 0);
}

TEST_CASE("unknown property names run nothing") {
    CHECK_FALSE(run_property("no_such_property", parse(fixtures::pi1), VerifyOptions{}));
}

TEST_CASE("minimizer returns non-violating programs unchanged") {
    Program p = parse(fixtures::pi1);
    Program q = minimize_counterexample(p, "theorem5_shift_equivalence", VerifyOptions{});
    CHECK(p == q);
}

TEST_CASE("property names expected by tooling exist") {
    auto has = [](const char* name) {
        for (const PropertyCheck& c : property_suite())
            if (std::string(name) == c.name) return true;
        return false;
    };
    CHECK(has("theorem5_shift_equivalence"));
    CHECK(has("theorem1_criteria_agreement"));
    CHECK(has("theorem2_minimal_unfounded_equivalence"));
    CHECK(has("theorem4_gadget_equivalence"));
    CHECK(has("prop13_modular_stability"));
}

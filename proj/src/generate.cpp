#include "elp/generate.hpp"

namespace elp {
namespace {

// splitmix64; fixed algorithm keeps runs reproducible across compilers.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

std::string pool_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

} // namespace

Program random_program(std::uint64_t seed, std::uint64_t index, const GeneratorOptions& opts) {
    Rng rng{(seed ^ 0x5851f42d4c957f2dULL) + index * 0x14057b7ef767814fULL};
    ProgramBuilder builder;
    auto pick_set = [&](std::size_t max_size) {
        AtomSet s;
        std::size_t size = rng.below(max_size + 1);
        for (std::size_t i = 0; i < size; ++i)
            s.add(builder.atom(pool_name(rng.below(opts.pool_atoms))));
        return s;
    };
    std::size_t nrules = 1 + rng.below(opts.max_rules);
    for (std::size_t i = 0; i < nrules; ++i) {
        Rule r;
        r.head = pick_set(opts.max_head);
        r.pos = pick_set(opts.max_body);
        r.neg = pick_set(opts.max_body);
        r.dneg = pick_set(opts.max_body);
        builder.add(std::move(r));
    }
    return builder.finish();
}

} // namespace elp

#ifndef ELP_GENERATE_HPP
#define ELP_GENERATE_HPP

#include <cstdint>
#include <cstddef>

#include "elp/program.hpp"

namespace elp {

struct GeneratorOptions {
    std::size_t pool_atoms = 6; // fixed atom pool a, b, c, ...
    std::size_t max_rules = 10; // rule count uniform in [1, max_rules]
    std::size_t max_head = 3;   // per-rule component sizes uniform in [0, max]
    std::size_t max_body = 3;   // applies to pos, neg and dneg independently
};

/// Deterministic in (seed, index) on every platform; no std
/// distributions involved.
Program random_program(std::uint64_t seed, std::uint64_t index, const GeneratorOptions& opts);

} // namespace elp

#endif

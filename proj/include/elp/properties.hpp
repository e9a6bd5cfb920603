#ifndef ELP_PROPERTIES_HPP
#define ELP_PROPERTIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "elp/errors.hpp"
#include "elp/generate.hpp"
#include "elp/program.hpp"

namespace elp {

struct VerifyOptions {
    std::size_t guard = default_guard;
};

/// One cross-module assertion; run returns a human-readable violation
/// or nothing. Checks gate themselves on instance size where an
/// enumeration would not be desk-scale.
struct PropertyCheck {
    const char* name;
    std::optional<std::string> (*run)(const Program&, const VerifyOptions&);
};

const std::vector<PropertyCheck>& property_suite();

struct PropertyViolation {
    std::string property;
    std::string detail;
};

/// First violated property, in suite order.
std::optional<PropertyViolation> check_properties(const Program& p, const VerifyOptions& opts);

/// Re-runs a single property by name; unknown names yield nothing.
std::optional<std::string> run_property(const std::string& name, const Program& p,
                                        const VerifyOptions& opts);

/// Greedy rule deletion, then per-atom erasure, while the named
/// property stays violated.
Program minimize_counterexample(Program p, const std::string& property,
                                const VerifyOptions& opts);

struct VerifyReport {
    bool ok = true;
    std::uint64_t instances = 0;
    std::optional<PropertyViolation> violation;
    std::optional<Program> counterexample;
};

VerifyReport verify_random_programs(std::uint64_t seed, std::uint64_t count,
                                    const GeneratorOptions& gen, const VerifyOptions& opts);

} // namespace elp

#endif

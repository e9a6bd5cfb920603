#ifndef ELP_ERRORS_HPP
#define ELP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elp {

// Ceiling for operations that enumerate subsets of atoms. Overridable
// per call (CLI: --max-atoms).
inline constexpr std::size_t default_guard = 20;

// Malformed program text; positions are 1-based.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An enumeration would exceed the configured subset guard.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, std::size_t size, std::size_t guard)
        : std::runtime_error(what + ": " + std::to_string(size) +
                             " atoms exceeds enumeration guard " + std::to_string(guard)) {}
};

// A documented operation precondition does not hold.
class PreconditionViolated : public std::logic_error {
public:
    explicit PreconditionViolated(const std::string& what) : std::logic_error(what) {}
};

} // namespace elp

#endif

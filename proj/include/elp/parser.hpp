#ifndef ELP_PARSER_HPP
#define ELP_PARSER_HPP

#include <string>
#include <string_view>

#include "elp/program.hpp"

namespace elp {

struct SourceProgram {
    std::string text;
    std::string origin = "<stdin>";
};

/// Parses the textual rule format:
///
///   program := { rule }
///   rule    := head [ ":-" [ body ] ] "."
///   head    := "" | atom { ";" atom }
///   body    := lit { "," lit }
///   lit     := atom | "not" atom | "not" "not" atom
///   atom    := [a-zA-Z_][a-zA-Z0-9_]*
///
/// "%" starts a comment running to end of line; whitespace is
/// insignificant. An empty head is a constraint and requires ":-".
/// "not" is reserved and cannot name an atom. Duplicate atoms within
/// one rule component are dropped. Throws SyntaxError with 1-based
/// line/column on malformed input; the empty text yields an empty
/// program.
Program parse_program(const SourceProgram& src);
Program parse_program(std::string_view text, std::string origin = "<string>");

/// Canonical text: one rule per line; head atoms joined by " ; ";
/// body literals in order pos, "not" literals, "not not" literals,
/// joined by ", "; atoms within a component in ascending index order.
std::string render_program(const Program& p);
std::string render_rule(const Program& p, const Rule& r);

} // namespace elp

#endif

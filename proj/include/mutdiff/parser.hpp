#pragma once

#include <string>
#include <string_view>

#include "mutdiff/ast.hpp"

namespace mutdiff {

/// Parses one `.mlang` program and runs all static checks (typing, definite
/// assignment, outputs assigned on every path). The returned Program
/// satisfies every Program invariant. Throws SyntaxError, TypeError,
/// UndeclaredVariable, UseBeforeDef or UnsupportedConstruct.
Program parse(std::string_view source_text);

/// Re-runs the static checks on an already-built AST (used to vet candidate
/// mutants and transformed programs). Throws like parse().
void check_program(const Program& p);

}  // namespace mutdiff

#pragma once

#include <string>
#include <vector>

#include "mutdiff/ast.hpp"

namespace mutdiff {

/// Canonical source form: one statement per line, four-space indents,
/// braces K&R style. parse(pretty_print(p)) is structurally equal to p.
std::string pretty_print(const Program& p);

/// Statement list only, without the program header (used when comparing
/// transformed bodies against expected fragments).
std::string pretty_print_body(const std::vector<StmtPtr>& body, int indent = 0);

std::string pretty_print(const StmtPtr& s, int indent = 0);
std::string pretty_print(const ExprPtr& e);

/// Splits a string into language tokens, dropping all whitespace. Two texts
/// are the same program modulo whitespace iff their token vectors are equal.
std::vector<std::string> tokenize_for_compare(const std::string& text);

}  // namespace mutdiff

#pragma once

#include <string>

#include "mutdiff/constraint.hpp"

namespace mutdiff {

/// Renders the system as SMT-LIB2 text over bounded integers: declarations,
/// one bounds assertion per integer variable, one assertion per constraint,
/// and a final (check-sat). Division and modulo are emitted with
/// truncated-toward-zero helpers so the exported semantics match the
/// interpreter; every divisor is additionally asserted non-zero, mirroring
/// the strict evaluation rule. Output is deterministic.
std::string export_smtlib(const ConstraintSystem& cs);

}  // namespace mutdiff

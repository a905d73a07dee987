#pragma once

#include <string>
#include <vector>

#include "mutdiff/ast.hpp"

namespace mutdiff {

struct LoopFreeProgram {
  /// The rewritten program: flag declarations prepended, every while
  /// replaced by a nested conditional of depth nd.
  Program program;
  /// Fresh flag variables, one per eliminated loop, in source pre-order.
  std::vector<std::string> loop_flags;
  int nd = 1;
};

/// Replaces every `while (c) { B }` by the expansion U(nd) with
/// U(0) = `if (c) { loop_i = true; }` and U(k) = `if (c) { B; U(k-1) }`.
/// Flags are named loop_<line of the while>, declared false at the top of
/// the program. For any input whose execution runs every loop at most nd
/// iterations, the result computes the same outputs and all flags stay
/// false; a loop needing more than nd iterations sets its flag.
///
/// Requires nd >= 1 and distinct source lines for distinct whiles.
LoopFreeProgram eliminate_loops(const Program& p, int nd);

/// Flag variables in declaration order.
std::vector<std::string> flag_variables(const LoopFreeProgram& lfp);

}  // namespace mutdiff

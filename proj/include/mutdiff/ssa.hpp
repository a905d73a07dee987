#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"
#include "mutdiff/loop_elim.hpp"

namespace mutdiff {

/// Phi(guard, then_var, else_var) selects then_var when the guard is true.
/// The guard is the full path condition: the conjunction of every enclosing
/// branch condition of the merge, evaluated in the SSA versions current at
/// each branch entry. It is kept as an ordered conjunct list (outermost
/// first) so evaluation can stop at the first false conjunct, exactly like
/// the concrete execution it mirrors.
struct SsaPhi {
  std::vector<ExprPtr> guard;  // non-empty conjunct list
  std::string then_var;
  std::string else_var;
};

ExprPtr guard_conjunction(const std::vector<ExprPtr>& guard);

struct SsaAssignment {
  std::string target;  // base_version (plus any rename suffix)
  Ty type = Ty::Int;
  std::variant<ExprPtr, SsaPhi> rhs;  // expression over SSA variable names
  /// Path condition under which this assignment executes (conjuncts,
  /// outermost first; empty for unconditional code and for Phi merges).
  /// When the path is not taken the variable holds an inert placeholder
  /// value that no later merge ever selects.
  std::vector<ExprPtr> guard;

  bool is_phi() const { return std::holds_alternative<SsaPhi>(rhs); }
};

struct SsaProgram {
  /// Assignment list in presentation order. Every referenced variable is a
  /// version-0 input or assigned earlier in the list; no target repeats.
  std::vector<SsaAssignment> assignments;
  std::map<std::string, std::string> input_versions;  // base -> version-0 name
  std::map<std::string, std::string> final_versions;  // base -> last ssa name
  std::map<std::string, Ty> var_types;                // ssa name -> type
  std::vector<std::string> output_bases;              // declared outputs, in order
  std::vector<std::string> flag_bases;                // loop flags, in order
};

/// Converts a loop-free program to SSA. Version counters start at 0 per base
/// variable; inputs stay at version 0 and every definition (declarations
/// included) bumps the counter. One Phi per conditional merge, guarded by
/// the full path condition; a branch-final version whose Phi chain already
/// bottoms out at the pre-branch version is not re-merged at outer levels.
SsaProgram to_ssa(const LoopFreeProgram& lfp);

/// Appends the postfix _M to every variable (version suffix included).
/// Structure is otherwise identical. Applying it twice stacks suffixes.
SsaProgram rename_for_mutant(const SsaProgram& s);

struct SsaEvalResult {
  enum class Kind { Normal, DomainOverflow, DivisionByZero };
  Kind kind = Kind::Normal;
  /// Every SSA variable's computed value (Normal runs only).
  VariableEnvironment values;
  SourceLoc failure_loc;

  bool normal() const { return kind == Kind::Normal; }
};

/// Placeholder an assignment's target takes when its path is not executed.
Value inert_value(Ty ty, const DomainConfig& dom);

/// Sequentially evaluates the assignment list; the reference oracle for the
/// constraint encoding. Guards are scanned outermost-first and evaluation of
/// an assignment's right-hand side happens only on taken paths, so failure
/// behavior (overflow, division by zero) matches interpreting the loop-free
/// program. The input must bind every version-0 input name.
SsaEvalResult eval_ssa(const SsaProgram& s, const VariableEnvironment& input,
                       const DomainConfig& dom = {});

/// Final versions of the outputs plus all flag variables, keyed by SSA name.
VariableEnvironment ssa_finals(const SsaProgram& s, const VariableEnvironment& values);

std::string pretty_print(const SsaProgram& s);

}  // namespace mutdiff

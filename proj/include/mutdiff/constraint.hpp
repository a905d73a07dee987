#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"
#include "mutdiff/ssa.hpp"

namespace mutdiff {

struct VarDecl {
  std::string name;
  Ty type = Ty::Int;  // ints range over [int_min, int_max], bools over {false, true}
};

/// var = rhs when the guard conjunction holds, an inert placeholder
/// otherwise. On taken paths the right-hand side must evaluate (no division
/// by zero, all intermediate values in the domain), mirroring concrete
/// execution; untaken paths impose nothing. An empty guard means the
/// equation is unconditional.
struct EqC {
  std::string var;
  ExprPtr rhs;
  std::vector<ExprPtr> guard;
};

/// var = Phi(guard, then_var, else_var) with the guard an ordered conjunct
/// list evaluated with short-circuiting.
struct PhiEqC {
  std::string var;
  std::vector<ExprPtr> guard;
  std::string then_var;
  std::string else_var;
};

/// Ties a program input to its mutant-side copy: var = var_m.
struct InputTieC {
  std::string var;
  std::string var_m;
};

/// At least one output pair differs. Appears exactly once per joint system.
struct OutputDiffersC {
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// Forbids one exact tuple of input values.
struct BlockingC {
  VariableEnvironment inputs;
};

/// Pins a boolean variable to a value.
struct FlagValueC {
  std::string var;
  bool value = false;
};

using Constraint = std::variant<EqC, PhiEqC, InputTieC, OutputDiffersC, BlockingC, FlagValueC>;

struct ConstraintSystem {
  DomainConfig domain;
  std::vector<VarDecl> variables;
  std::vector<Constraint> constraints;
  /// Original-program input variables (version-0 names), the tuple blocking
  /// clauses and witnesses range over.
  std::vector<std::string> input_vars;
  std::map<std::string, std::string> input_bases;  // ssa input name -> base name
  std::vector<std::pair<std::string, std::string>> output_pairs;
  /// Final versions of every loop flag, both sides after a join.
  std::vector<std::string> flag_vars;
};

struct Solution {
  VariableEnvironment assignment;
};

/// One Eq/PhiEq per SSA assignment; version-0 inputs become free variables.
ConstraintSystem encode(const SsaProgram& s, const DomainConfig& dom = {});

/// Union of both systems plus one InputTie per input pair and a single
/// OutputDiffers over all output pairs. The mutant side must already carry
/// the _M rename. Throws NoOutputs when output_pairs is empty.
ConstraintSystem build_joint_system(
    const ConstraintSystem& con_p, const ConstraintSystem& con_m,
    const std::vector<std::pair<std::string, std::string>>& input_ties,
    const std::vector<std::pair<std::string, std::string>>& output_pairs);

/// Independent constraint checker: evaluates every constraint under the
/// assignment. Returns a violation description, or nullopt when the
/// assignment satisfies the whole system.
std::optional<std::string> check_solution(const ConstraintSystem& cs,
                                          const VariableEnvironment& assignment);

/// Debugging dump of the system as JSON.
std::string system_to_json(const ConstraintSystem& cs);

}  // namespace mutdiff

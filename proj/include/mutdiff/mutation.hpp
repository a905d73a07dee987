#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mutdiff/ast.hpp"

namespace mutdiff {

/// Method-level mutation operator classes. Every concrete mutation changes
/// exactly one operator or one constant at one AST location.
enum class MutationOperatorClass {
  AOR,  // binary arithmetic operator replacement within {+ - * / %}
  ROR,  // relational operator replacement within {< <= > >= == !=}
  COR,  // logical connective replacement within {and or}
  UOI,  // unary operator insertion (- on int, not on bool), composite operands only
  UOD,  // unary operator deletion
  CRP,  // constant replacement: c -> c+1, c-1, 0, 1, -c; true <-> false
  VRP,  // variable reference replacement (off by default; explodes mutant counts)
};

std::string to_string(MutationOperatorClass c);
std::optional<MutationOperatorClass> operator_class_from_string(const std::string& s);

/// The default operator set: everything except VRP.
std::set<MutationOperatorClass> default_operator_classes();

struct ReplaceBinaryOp {
  BinOp new_op;
};
struct InsertUnaryOp {
  UnOp op;
};
struct DeleteUnaryOp {};
struct ReplaceIntConstant {
  std::int64_t new_value;
};
struct ReplaceBoolConstant {
  bool new_value;
};
struct ReplaceVariable {
  std::string new_name;
};

using MutationInstance = std::variant<ReplaceBinaryOp, InsertUnaryOp, DeleteUnaryOp,
                                      ReplaceIntConstant, ReplaceBoolConstant, ReplaceVariable>;

struct Mutant {
  std::string id;
  Program base;
  AstPath location;
  MutationOperatorClass operator_class = MutationOperatorClass::AOR;
  std::string original_fragment;
  std::string mutated_fragment;
  Program program;
};

/// Applies one mutation at `location`, returning a new well-typed program;
/// `p` itself is unmodified. Throws InvalidLocation when the path does not
/// resolve or does not match the instance shape, NotAMutation when the
/// result would be syntactically identical, and IllTypedMutation when the
/// mutated program fails the static checks.
Program apply_mutation(const Program& p, const AstPath& location, const MutationInstance& inst);

/// Generates all distinct well-typed single-point mutants of `p` under the
/// enabled classes, in deterministic order: AST pre-order, then operator
/// table order. Candidates whose mutated program is syntactically identical
/// to an earlier mutant (or to `p`) are dropped.
std::vector<Mutant> generate_mutants(const Program& p,
                                     const std::set<MutationOperatorClass>& enabled);

/// JSON listing of mutants: [{id, operator_class, location, original, mutated}].
std::string mutants_to_json(const std::vector<Mutant>& mutants);

}  // namespace mutdiff

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mutdiff {

enum class Ty { Int, Bool };

std::string to_string(Ty t);

struct SourceLoc {
  int line = 0;
  int col = 0;
};

enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnOp { Neg, Not };

bool is_arith(BinOp op);   // + - * / %
bool is_rel(BinOp op);     // < <= > >= == !=
bool is_logic(BinOp op);   // and or
std::string to_string(BinOp op);
std::string to_string(UnOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntConst {
  std::int64_t value = 0;
};
struct BoolConst {
  bool value = false;
};
struct VarRef {
  std::string name;
};
struct Binary {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Unary {
  UnOp op;
  ExprPtr operand;
};

/// Expressions are immutable trees shared by pointer; mutation produces new
/// trees via path copying and never touches existing nodes.
struct Expr {
  std::variant<IntConst, BoolConst, VarRef, Binary, Unary> node;
  SourceLoc loc;
};

ExprPtr make_int(std::int64_t v, SourceLoc loc = {});
ExprPtr make_bool(bool v, SourceLoc loc = {});
ExprPtr make_var(std::string name, SourceLoc loc = {});
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceLoc loc = {});
ExprPtr make_unary(UnOp op, ExprPtr operand, SourceLoc loc = {});

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Assign {
  std::string target;
  ExprPtr value;
};
struct Decl {
  std::string name;
  Ty type = Ty::Int;
  ExprPtr init;
};
struct If {
  ExprPtr cond;
  std::vector<StmtPtr> then_body;
  std::vector<StmtPtr> else_body;
};
struct While {
  ExprPtr cond;
  std::vector<StmtPtr> body;
};

struct Stmt {
  std::variant<Assign, Decl, If, While> node;
  SourceLoc loc;
};

StmtPtr make_assign(std::string target, ExprPtr value, SourceLoc loc = {});
StmtPtr make_decl(std::string name, Ty type, ExprPtr init, SourceLoc loc = {});
StmtPtr make_if(ExprPtr cond, std::vector<StmtPtr> then_body, std::vector<StmtPtr> else_body,
                SourceLoc loc = {});
StmtPtr make_while(ExprPtr cond, std::vector<StmtPtr> body, SourceLoc loc = {});

struct Param {
  std::string name;
  Ty type = Ty::Int;
};

struct Program {
  std::string name;
  std::vector<Param> inputs;
  std::vector<Param> outputs;
  std::vector<StmtPtr> body;
};

/// Runtime value of the mini-language: a bounded integer or a boolean.
struct Value {
  std::variant<std::int64_t, bool> v;

  Value() : v(std::int64_t{0}) {}
  explicit Value(std::int64_t i) : v(i) {}
  explicit Value(bool b) : v(b) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(v); }
  bool is_bool() const { return std::holds_alternative<bool>(v); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v); }
  bool as_bool() const { return std::get<bool>(v); }
  Ty type() const { return is_int() ? Ty::Int : Ty::Bool; }

  friend bool operator==(const Value& a, const Value& b) { return a.v == b.v; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
};

std::string to_string(const Value& v);

/// Mapping variable name -> value; the I and O of a test case.
using VariableEnvironment = std::map<std::string, Value>;

std::string to_string(const VariableEnvironment& env);

struct TestCase {
  VariableEnvironment input;
  VariableEnvironment expected_output;  // may bind only a subset of outputs
};

// --- structural equality (source locations ignored) ----------------------

bool equal(const Expr& a, const Expr& b);
bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b);
bool equal(const Program& a, const Program& b);

// --- AST paths ------------------------------------------------------------

/// A path addresses one expression node inside a program, walking through
/// statement lists into an expression tree.
struct PathStep {
  enum class Tag {
    Body,     // i-th statement of the program body
    Then,     // i-th statement of an If's then branch
    Else,     // i-th statement of an If's else branch
    Cond,     // condition expression of an If/While
    Value,    // rhs expression of an Assign
    Init,     // initializer expression of a Decl
    Left,     // lhs of a Binary
    Right,    // rhs of a Binary
    Operand,  // operand of a Unary
  };
  Tag tag;
  int index = 0;  // used by Body/Then/Else only

  friend bool operator==(const PathStep& a, const PathStep& b) {
    return a.tag == b.tag && a.index == b.index;
  }
};

using AstPath = std::vector<PathStep>;

std::string to_string(const AstPath& path);

/// Resolves a path to the expression it addresses. Throws InvalidLocation.
ExprPtr expr_at(const Program& p, const AstPath& path);

/// Returns a copy of `p` with the expression at `path` replaced. The input
/// program is untouched. Throws InvalidLocation.
Program replace_expr(const Program& p, const AstPath& path, ExprPtr replacement);

/// Enumerates every expression node of the program in pre-order
/// (statements first to last, conditions before bodies, lhs before rhs).
void for_each_expr(const Program& p,
                   const std::function<void(const AstPath&, const ExprPtr&)>& fn);

}  // namespace mutdiff

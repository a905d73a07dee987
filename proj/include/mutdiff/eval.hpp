#pragma once

#include <utility>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"

namespace mutdiff {

enum class EvalFailureKind { DomainOverflow, DivisionByZero };

/// Internal control-flow signal for failed evaluation; callers translate it
/// into their outcome type. Not derived from std::exception on purpose: it
/// must never escape the library boundary unhandled.
struct EvalAbort {
  EvalFailureKind kind;
  SourceLoc loc;
};

inline std::int64_t check_domain(std::int64_t v, const DomainConfig& dom, SourceLoc loc) {
  if (!dom.contains(v)) throw EvalAbort{EvalFailureKind::DomainOverflow, loc};
  return v;
}

inline Value apply_binop(BinOp op, const Value& lhs, const Value& rhs, const DomainConfig& dom,
                         SourceLoc loc) {
  switch (op) {
    case BinOp::Add: return Value(check_domain(lhs.as_int() + rhs.as_int(), dom, loc));
    case BinOp::Sub: return Value(check_domain(lhs.as_int() - rhs.as_int(), dom, loc));
    case BinOp::Mul: return Value(check_domain(lhs.as_int() * rhs.as_int(), dom, loc));
    case BinOp::Div:
      if (rhs.as_int() == 0) throw EvalAbort{EvalFailureKind::DivisionByZero, loc};
      // C++ integer division already truncates toward zero.
      return Value(check_domain(lhs.as_int() / rhs.as_int(), dom, loc));
    case BinOp::Mod:
      if (rhs.as_int() == 0) throw EvalAbort{EvalFailureKind::DivisionByZero, loc};
      return Value(check_domain(lhs.as_int() % rhs.as_int(), dom, loc));
    case BinOp::Lt: return Value(lhs.as_int() < rhs.as_int());
    case BinOp::Le: return Value(lhs.as_int() <= rhs.as_int());
    case BinOp::Gt: return Value(lhs.as_int() > rhs.as_int());
    case BinOp::Ge: return Value(lhs.as_int() >= rhs.as_int());
    case BinOp::Eq: return Value(lhs.as_int() == rhs.as_int());
    case BinOp::Ne: return Value(lhs.as_int() != rhs.as_int());
    // Boolean connectives are strict: both operands are always evaluated,
    // matching the constraint-side semantics exactly.
    case BinOp::And: return Value(lhs.as_bool() && rhs.as_bool());
    case BinOp::Or: return Value(lhs.as_bool() || rhs.as_bool());
  }
  throw EvalAbort{EvalFailureKind::DomainOverflow, loc};  // unreachable
}

inline Value apply_unop(UnOp op, const Value& operand, const DomainConfig& dom, SourceLoc loc) {
  if (op == UnOp::Neg) return Value(check_domain(-operand.as_int(), dom, loc));
  return Value(!operand.as_bool());
}

/// Evaluates an expression with `lookup(name, loc) -> Value` resolving
/// variable references. Integer constants are domain-checked like any other
/// value. Throws EvalAbort on overflow or division by zero.
template <typename Lookup>
Value eval_expr(const Expr& e, Lookup&& lookup, const DomainConfig& dom) {
  if (const auto* ic = std::get_if<IntConst>(&e.node))
    return Value(check_domain(ic->value, dom, e.loc));
  if (const auto* bc = std::get_if<BoolConst>(&e.node)) return Value(bc->value);
  if (const auto* v = std::get_if<VarRef>(&e.node)) return lookup(v->name, e.loc);
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    Value lhs = eval_expr(*b->lhs, lookup, dom);
    Value rhs = eval_expr(*b->rhs, lookup, dom);
    return apply_binop(b->op, lhs, rhs, dom, e.loc);
  }
  const auto& u = std::get<Unary>(e.node);
  return apply_unop(u.op, eval_expr(*u.operand, lookup, dom), dom, e.loc);
}

}  // namespace mutdiff

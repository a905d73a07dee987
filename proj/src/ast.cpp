#include "mutdiff/ast.hpp"

#include <sstream>

#include "mutdiff/errors.hpp"

namespace mutdiff {

std::string to_string(Ty t) { return t == Ty::Int ? "int" : "bool"; }

bool is_arith(BinOp op) {
  switch (op) {
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
      return true;
    default:
      return false;
  }
}

bool is_rel(BinOp op) {
  switch (op) {
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge:
    case BinOp::Eq:
    case BinOp::Ne:
      return true;
    default:
      return false;
  }
}

bool is_logic(BinOp op) { return op == BinOp::And || op == BinOp::Or; }

std::string to_string(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
  }
  return "?";
}

std::string to_string(UnOp op) { return op == UnOp::Neg ? "-" : "not"; }

ExprPtr make_int(std::int64_t v, SourceLoc loc) {
  return std::make_shared<Expr>(Expr{IntConst{v}, loc});
}
ExprPtr make_bool(bool v, SourceLoc loc) {
  return std::make_shared<Expr>(Expr{BoolConst{v}, loc});
}
ExprPtr make_var(std::string name, SourceLoc loc) {
  return std::make_shared<Expr>(Expr{VarRef{std::move(name)}, loc});
}
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceLoc loc) {
  return std::make_shared<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}, loc});
}
ExprPtr make_unary(UnOp op, ExprPtr operand, SourceLoc loc) {
  return std::make_shared<Expr>(Expr{Unary{op, std::move(operand)}, loc});
}

StmtPtr make_assign(std::string target, ExprPtr value, SourceLoc loc) {
  return std::make_shared<Stmt>(Stmt{Assign{std::move(target), std::move(value)}, loc});
}
StmtPtr make_decl(std::string name, Ty type, ExprPtr init, SourceLoc loc) {
  return std::make_shared<Stmt>(Stmt{Decl{std::move(name), type, std::move(init)}, loc});
}
StmtPtr make_if(ExprPtr cond, std::vector<StmtPtr> then_body, std::vector<StmtPtr> else_body,
                SourceLoc loc) {
  return std::make_shared<Stmt>(
      Stmt{If{std::move(cond), std::move(then_body), std::move(else_body)}, loc});
}
StmtPtr make_while(ExprPtr cond, std::vector<StmtPtr> body, SourceLoc loc) {
  return std::make_shared<Stmt>(Stmt{While{std::move(cond), std::move(body)}, loc});
}

std::string to_string(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  return v.as_bool() ? "true" : "false";
}

std::string to_string(const VariableEnvironment& env) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [name, value] : env) {
    if (!first) out << ", ";
    first = false;
    out << name << ":" << to_string(value);
  }
  out << "}";
  return out.str();
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ia = std::get_if<IntConst>(&a.node))
    return ia->value == std::get<IntConst>(b.node).value;
  if (const auto* ba = std::get_if<BoolConst>(&a.node))
    return ba->value == std::get<BoolConst>(b.node).value;
  if (const auto* va = std::get_if<VarRef>(&a.node))
    return va->name == std::get<VarRef>(b.node).name;
  if (const auto* na = std::get_if<Binary>(&a.node)) {
    const auto& nb = std::get<Binary>(b.node);
    return na->op == nb.op && equal(na->lhs, nb.lhs) && equal(na->rhs, nb.rhs);
  }
  const auto& ua = std::get<Unary>(a.node);
  const auto& ub = std::get<Unary>(b.node);
  return ua.op == ub.op && equal(ua.operand, ub.operand);
}

bool equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(*a[i], *b[i])) return false;
  return true;
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* sa = std::get_if<Assign>(&a.node)) {
    const auto& sb = std::get<Assign>(b.node);
    return sa->target == sb.target && equal(sa->value, sb.value);
  }
  if (const auto* da = std::get_if<Decl>(&a.node)) {
    const auto& db = std::get<Decl>(b.node);
    return da->name == db.name && da->type == db.type && equal(da->init, db.init);
  }
  if (const auto* fa = std::get_if<If>(&a.node)) {
    const auto& fb = std::get<If>(b.node);
    return equal(fa->cond, fb.cond) && equal(fa->then_body, fb.then_body) &&
           equal(fa->else_body, fb.else_body);
  }
  const auto& wa = std::get<While>(a.node);
  const auto& wb = std::get<While>(b.node);
  return equal(wa.cond, wb.cond) && equal(wa.body, wb.body);
}

bool equal(const Program& a, const Program& b) {
  auto params_equal = [](const std::vector<Param>& x, const std::vector<Param>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].name != y[i].name || x[i].type != y[i].type) return false;
    return true;
  };
  return a.name == b.name && params_equal(a.inputs, b.inputs) &&
         params_equal(a.outputs, b.outputs) && equal(a.body, b.body);
}

// --- paths ------------------------------------------------------------------

std::string to_string(const AstPath& path) {
  std::ostringstream out;
  for (const auto& step : path) {
    switch (step.tag) {
      case PathStep::Tag::Body: out << "/body[" << step.index << "]"; break;
      case PathStep::Tag::Then: out << "/then[" << step.index << "]"; break;
      case PathStep::Tag::Else: out << "/else[" << step.index << "]"; break;
      case PathStep::Tag::Cond: out << "/cond"; break;
      case PathStep::Tag::Value: out << "/value"; break;
      case PathStep::Tag::Init: out << "/init"; break;
      case PathStep::Tag::Left: out << "/lhs"; break;
      case PathStep::Tag::Right: out << "/rhs"; break;
      case PathStep::Tag::Operand: out << "/operand"; break;
    }
  }
  return out.str();
}

namespace {

ExprPtr expr_descend(const ExprPtr& e, const AstPath& path, std::size_t at) {
  if (at == path.size()) return e;
  const auto& step = path[at];
  if (const auto* bin = std::get_if<Binary>(&e->node)) {
    if (step.tag == PathStep::Tag::Left) return expr_descend(bin->lhs, path, at + 1);
    if (step.tag == PathStep::Tag::Right) return expr_descend(bin->rhs, path, at + 1);
  } else if (const auto* un = std::get_if<Unary>(&e->node)) {
    if (step.tag == PathStep::Tag::Operand) return expr_descend(un->operand, path, at + 1);
  }
  throw InvalidLocation("path does not match expression shape at " + to_string(path));
}

ExprPtr stmt_descend(const StmtPtr& s, const AstPath& path, std::size_t at) {
  if (at == path.size()) throw InvalidLocation("path stops at a statement: " + to_string(path));
  const auto& step = path[at];
  if (const auto* a = std::get_if<Assign>(&s->node)) {
    if (step.tag == PathStep::Tag::Value) return expr_descend(a->value, path, at + 1);
  } else if (const auto* d = std::get_if<Decl>(&s->node)) {
    if (step.tag == PathStep::Tag::Init) return expr_descend(d->init, path, at + 1);
  } else if (const auto* f = std::get_if<If>(&s->node)) {
    if (step.tag == PathStep::Tag::Cond) return expr_descend(f->cond, path, at + 1);
    if (step.tag == PathStep::Tag::Then) {
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= f->then_body.size())
        throw InvalidLocation("then index out of range: " + to_string(path));
      return stmt_descend(f->then_body[step.index], path, at + 1);
    }
    if (step.tag == PathStep::Tag::Else) {
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= f->else_body.size())
        throw InvalidLocation("else index out of range: " + to_string(path));
      return stmt_descend(f->else_body[step.index], path, at + 1);
    }
  } else if (const auto* w = std::get_if<While>(&s->node)) {
    if (step.tag == PathStep::Tag::Cond) return expr_descend(w->cond, path, at + 1);
    if (step.tag == PathStep::Tag::Body) {
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= w->body.size())
        throw InvalidLocation("body index out of range: " + to_string(path));
      return stmt_descend(w->body[step.index], path, at + 1);
    }
  }
  throw InvalidLocation("path does not match statement shape at " + to_string(path));
}

ExprPtr expr_rebuild(const ExprPtr& e, const AstPath& path, std::size_t at, ExprPtr replacement) {
  if (at == path.size()) return replacement;
  const auto& step = path[at];
  if (const auto* bin = std::get_if<Binary>(&e->node)) {
    if (step.tag == PathStep::Tag::Left)
      return make_binary(bin->op, expr_rebuild(bin->lhs, path, at + 1, std::move(replacement)),
                         bin->rhs, e->loc);
    if (step.tag == PathStep::Tag::Right)
      return make_binary(bin->op, bin->lhs,
                         expr_rebuild(bin->rhs, path, at + 1, std::move(replacement)), e->loc);
  } else if (const auto* un = std::get_if<Unary>(&e->node)) {
    if (step.tag == PathStep::Tag::Operand)
      return make_unary(un->op, expr_rebuild(un->operand, path, at + 1, std::move(replacement)),
                        e->loc);
  }
  throw InvalidLocation("path does not match expression shape at " + to_string(path));
}

StmtPtr stmt_rebuild(const StmtPtr& s, const AstPath& path, std::size_t at, ExprPtr replacement) {
  if (at == path.size()) throw InvalidLocation("path stops at a statement: " + to_string(path));
  const auto& step = path[at];
  if (const auto* a = std::get_if<Assign>(&s->node)) {
    if (step.tag == PathStep::Tag::Value)
      return make_assign(a->target, expr_rebuild(a->value, path, at + 1, std::move(replacement)),
                         s->loc);
  } else if (const auto* d = std::get_if<Decl>(&s->node)) {
    if (step.tag == PathStep::Tag::Init)
      return make_decl(d->name, d->type, expr_rebuild(d->init, path, at + 1, std::move(replacement)),
                       s->loc);
  } else if (const auto* f = std::get_if<If>(&s->node)) {
    if (step.tag == PathStep::Tag::Cond)
      return make_if(expr_rebuild(f->cond, path, at + 1, std::move(replacement)), f->then_body,
                     f->else_body, s->loc);
    if (step.tag == PathStep::Tag::Then) {
      auto body = f->then_body;
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= body.size())
        throw InvalidLocation("then index out of range: " + to_string(path));
      body[step.index] = stmt_rebuild(body[step.index], path, at + 1, std::move(replacement));
      return make_if(f->cond, std::move(body), f->else_body, s->loc);
    }
    if (step.tag == PathStep::Tag::Else) {
      auto body = f->else_body;
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= body.size())
        throw InvalidLocation("else index out of range: " + to_string(path));
      body[step.index] = stmt_rebuild(body[step.index], path, at + 1, std::move(replacement));
      return make_if(f->cond, f->then_body, std::move(body), s->loc);
    }
  } else if (const auto* w = std::get_if<While>(&s->node)) {
    if (step.tag == PathStep::Tag::Cond)
      return make_while(expr_rebuild(w->cond, path, at + 1, std::move(replacement)), w->body,
                        s->loc);
    if (step.tag == PathStep::Tag::Body) {
      auto body = w->body;
      if (step.index < 0 || static_cast<std::size_t>(step.index) >= body.size())
        throw InvalidLocation("body index out of range: " + to_string(path));
      body[step.index] = stmt_rebuild(body[step.index], path, at + 1, std::move(replacement));
      return make_while(w->cond, std::move(body), s->loc);
    }
  }
  throw InvalidLocation("path does not match statement shape at " + to_string(path));
}

void walk_expr(const ExprPtr& e, AstPath& path,
               const std::function<void(const AstPath&, const ExprPtr&)>& fn) {
  fn(path, e);
  if (const auto* bin = std::get_if<Binary>(&e->node)) {
    path.push_back({PathStep::Tag::Left, 0});
    walk_expr(bin->lhs, path, fn);
    path.back() = {PathStep::Tag::Right, 0};
    walk_expr(bin->rhs, path, fn);
    path.pop_back();
  } else if (const auto* un = std::get_if<Unary>(&e->node)) {
    path.push_back({PathStep::Tag::Operand, 0});
    walk_expr(un->operand, path, fn);
    path.pop_back();
  }
}

void walk_stmts(const std::vector<StmtPtr>& stmts, PathStep::Tag list_tag, AstPath& path,
                const std::function<void(const AstPath&, const ExprPtr&)>& fn) {
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    path.push_back({list_tag, static_cast<int>(i)});
    const auto& s = stmts[i];
    if (const auto* a = std::get_if<Assign>(&s->node)) {
      path.push_back({PathStep::Tag::Value, 0});
      walk_expr(a->value, path, fn);
      path.pop_back();
    } else if (const auto* d = std::get_if<Decl>(&s->node)) {
      path.push_back({PathStep::Tag::Init, 0});
      walk_expr(d->init, path, fn);
      path.pop_back();
    } else if (const auto* f = std::get_if<If>(&s->node)) {
      path.push_back({PathStep::Tag::Cond, 0});
      walk_expr(f->cond, path, fn);
      path.pop_back();
      walk_stmts(f->then_body, PathStep::Tag::Then, path, fn);
      walk_stmts(f->else_body, PathStep::Tag::Else, path, fn);
    } else if (const auto* w = std::get_if<While>(&s->node)) {
      path.push_back({PathStep::Tag::Cond, 0});
      walk_expr(w->cond, path, fn);
      path.pop_back();
      walk_stmts(w->body, PathStep::Tag::Body, path, fn);
    }
    path.pop_back();
  }
}

}  // namespace

ExprPtr expr_at(const Program& p, const AstPath& path) {
  if (path.empty() || path.front().tag != PathStep::Tag::Body)
    throw InvalidLocation("path must start at a body statement: " + to_string(path));
  if (path.front().index < 0 || static_cast<std::size_t>(path.front().index) >= p.body.size())
    throw InvalidLocation("body index out of range: " + to_string(path));
  return stmt_descend(p.body[path.front().index], path, 1);
}

Program replace_expr(const Program& p, const AstPath& path, ExprPtr replacement) {
  if (path.empty() || path.front().tag != PathStep::Tag::Body)
    throw InvalidLocation("path must start at a body statement: " + to_string(path));
  if (path.front().index < 0 || static_cast<std::size_t>(path.front().index) >= p.body.size())
    throw InvalidLocation("body index out of range: " + to_string(path));
  Program out = p;
  out.body[path.front().index] =
      stmt_rebuild(p.body[path.front().index], path, 1, std::move(replacement));
  return out;
}

void for_each_expr(const Program& p,
                   const std::function<void(const AstPath&, const ExprPtr&)>& fn) {
  AstPath path;
  walk_stmts(p.body, PathStep::Tag::Body, path, fn);
}

}  // namespace mutdiff

#include "mutdiff/pretty.hpp"

#include <cctype>
#include <sstream>

namespace mutdiff {

namespace {

// Precedence, loosest first. Primary atoms never need parentheses.
int prec(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinOp::Or: return 1;
      case BinOp::And: return 2;
      case BinOp::Lt:
      case BinOp::Le:
      case BinOp::Gt:
      case BinOp::Ge:
      case BinOp::Eq:
      case BinOp::Ne: return 4;
      case BinOp::Add:
      case BinOp::Sub: return 5;
      default: return 6;  // * / %
    }
  }
  if (std::holds_alternative<Unary>(e.node)) return 7;
  if (const auto* ic = std::get_if<IntConst>(&e.node))
    return ic->value < 0 ? 7 : 9;  // negative literal prints like a unary
  return 9;
}

bool is_atom(const Expr& e) {
  if (const auto* ic = std::get_if<IntConst>(&e.node)) return ic->value >= 0;
  return std::holds_alternative<BoolConst>(e.node) || std::holds_alternative<VarRef>(e.node);
}

void print_expr(const Expr& e, std::ostream& out);

void print_child(const Expr& child, int parent_prec, bool is_right, bool parent_is_logic,
                 std::ostream& out) {
  int cp = prec(child);
  bool parens = cp < parent_prec || (is_right && cp == parent_prec) ||
                (parent_is_logic && !is_atom(child));
  if (parens) out << "(";
  print_expr(child, out);
  if (parens) out << ")";
}

void print_expr(const Expr& e, std::ostream& out) {
  if (const auto* ic = std::get_if<IntConst>(&e.node)) {
    out << ic->value;
  } else if (const auto* bc = std::get_if<BoolConst>(&e.node)) {
    out << (bc->value ? "true" : "false");
  } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
    out << v->name;
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    int p = prec(e);
    bool logic = is_logic(b->op);
    print_child(*b->lhs, p, /*is_right=*/false, logic, out);
    out << " " << to_string(b->op) << " ";
    print_child(*b->rhs, p, /*is_right=*/true, logic, out);
  } else {
    const auto& u = std::get<Unary>(e.node);
    out << to_string(u.op);
    if (u.op == UnOp::Not) out << " ";
    if (is_atom(*u.operand)) {
      print_expr(*u.operand, out);
    } else {
      out << "(";
      print_expr(*u.operand, out);
      out << ")";
    }
  }
}

void print_stmt(const Stmt& s, int indent, std::ostream& out);

void print_block(const std::vector<StmtPtr>& body, int indent, std::ostream& out) {
  for (const auto& s : body) print_stmt(*s, indent, out);
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

void print_stmt(const Stmt& s, int indent, std::ostream& out) {
  if (const auto* a = std::get_if<Assign>(&s.node)) {
    out << pad(indent) << a->target << " = ";
    print_expr(*a->value, out);
    out << ";\n";
  } else if (const auto* d = std::get_if<Decl>(&s.node)) {
    out << pad(indent) << to_string(d->type) << " " << d->name << " = ";
    print_expr(*d->init, out);
    out << ";\n";
  } else if (const auto* f = std::get_if<If>(&s.node)) {
    out << pad(indent) << "if (";
    print_expr(*f->cond, out);
    out << ") {\n";
    print_block(f->then_body, indent + 1, out);
    if (!f->else_body.empty()) {
      out << pad(indent) << "} else {\n";
      print_block(f->else_body, indent + 1, out);
    }
    out << pad(indent) << "}\n";
  } else {
    const auto& w = std::get<While>(s.node);
    out << pad(indent) << "while (";
    print_expr(*w.cond, out);
    out << ") {\n";
    print_block(w.body, indent + 1, out);
    out << pad(indent) << "}\n";
  }
}

}  // namespace

std::string pretty_print(const ExprPtr& e) {
  std::ostringstream out;
  print_expr(*e, out);
  return out.str();
}

std::string pretty_print(const StmtPtr& s, int indent) {
  std::ostringstream out;
  print_stmt(*s, indent, out);
  return out.str();
}

std::string pretty_print_body(const std::vector<StmtPtr>& body, int indent) {
  std::ostringstream out;
  print_block(body, indent, out);
  return out.str();
}

std::string pretty_print(const Program& p) {
  std::ostringstream out;
  out << "program " << p.name << " {";
  for (const auto& in : p.inputs) out << " input " << to_string(in.type) << " " << in.name << ";";
  for (const auto& o : p.outputs) out << " output " << to_string(o.type) << " " << o.name << ";";
  out << "\n";
  print_block(p.body, 1, out);
  out << "}\n";
  return out.str();
}

std::vector<std::string> tokenize_for_compare(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word(text[j])) ++j;
      tokens.push_back(text.substr(i, j - i));
      i = j;
      continue;
    }
    // Two-character operators stay one token.
    if (i + 1 < text.size()) {
      std::string two = text.substr(i, 2);
      if (two == "<=" || two == ">=" || two == "==" || two == "!=") {
        tokens.push_back(two);
        i += 2;
        continue;
      }
    }
    tokens.push_back(std::string(1, c));
    ++i;
  }
  return tokens;
}

}  // namespace mutdiff

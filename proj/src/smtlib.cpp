#include "mutdiff/smtlib.hpp"

#include <sstream>
#include <vector>

namespace mutdiff {

namespace {

void emit_int(std::ostream& out, std::int64_t v) {
  if (v < 0)
    out << "(- " << -v << ")";
  else
    out << v;
}

class Emitter {
 public:
  explicit Emitter(const ConstraintSystem& cs) : cs_(cs) {}

  std::string run() {
    for (const auto& c : cs_.constraints) emit_constraint(c);

    std::ostringstream out;
    out << "; generated by mutdiff\n";
    out << "(set-logic ALL)\n";
    if (uses_div_) {
      // SMT-LIB div/mod are Euclidean; the language truncates toward zero.
      out << "(define-fun tdiv ((a Int) (b Int)) Int "
             "(ite (>= (* a b) 0) (div (abs a) (abs b)) (- (div (abs a) (abs b)))))\n";
      out << "(define-fun tmod ((a Int) (b Int)) Int (- a (* b (tdiv a b))))\n";
    }
    for (const auto& v : cs_.variables)
      out << "(declare-const " << v.name << " " << (v.type == Ty::Int ? "Int" : "Bool") << ")\n";
    for (const auto& v : cs_.variables) {
      if (v.type != Ty::Int) continue;
      out << "(assert (and (<= ";
      emit_int(out, cs_.domain.int_min);
      out << " " << v.name << ") (<= " << v.name << " ";
      emit_int(out, cs_.domain.int_max);
      out << ")))\n";
    }
    out << body_.str();
    out << "(check-sat)\n";
    return out.str();
  }

 private:
  void expr(const ExprPtr& e, std::ostream& out) {
    if (const auto* ic = std::get_if<IntConst>(&e->node)) {
      emit_int(out, ic->value);
    } else if (const auto* bc = std::get_if<BoolConst>(&e->node)) {
      out << (bc->value ? "true" : "false");
    } else if (const auto* v = std::get_if<VarRef>(&e->node)) {
      out << v->name;
    } else if (const auto* u = std::get_if<Unary>(&e->node)) {
      out << (u->op == UnOp::Neg ? "(- " : "(not ");
      expr(u->operand, out);
      out << ")";
    } else {
      const auto& b = std::get<Binary>(e->node);
      const char* op = nullptr;
      switch (b.op) {
        case BinOp::Add: op = "+"; break;
        case BinOp::Sub: op = "-"; break;
        case BinOp::Mul: op = "*"; break;
        case BinOp::Div: op = "tdiv"; break;
        case BinOp::Mod: op = "tmod"; break;
        case BinOp::Lt: op = "<"; break;
        case BinOp::Le: op = "<="; break;
        case BinOp::Gt: op = ">"; break;
        case BinOp::Ge: op = ">="; break;
        case BinOp::Eq: op = "="; break;
        case BinOp::Ne: op = "distinct"; break;
        case BinOp::And: op = "and"; break;
        case BinOp::Or: op = "or"; break;
      }
      if (b.op == BinOp::Div || b.op == BinOp::Mod) uses_div_ = true;
      out << "(" << op << " ";
      expr(b.lhs, out);
      out << " ";
      expr(b.rhs, out);
      out << ")";
    }
  }

  std::string expr_str(const ExprPtr& e) {
    std::ostringstream out;
    expr(e, out);
    return out.str();
  }

  std::string conj_str(const std::vector<ExprPtr>& guard) {
    if (guard.empty()) return "true";
    if (guard.size() == 1) return expr_str(guard[0]);
    std::string s = "(and";
    for (const auto& g : guard) s += " " + expr_str(g);
    return s + ")";
  }

  void assert_implied(const std::string& condition, const std::string& body) {
    if (condition == "true")
      body_ << "(assert " << body << ")\n";
    else
      body_ << "(assert (=> " << condition << " " << body << "))\n";
  }

  // Conditions for an expression to evaluate like the interpreter does when
  // the path holds: divisors are non-zero and every arithmetic intermediate
  // stays within the domain.
  void emit_definedness(const ExprPtr& e, const std::string& condition) {
    bool is_arith_node = false;
    if (const auto* ic = std::get_if<IntConst>(&e->node)) {
      if (!cs_.domain.contains(ic->value)) assert_implied(condition, "false");
      return;
    }
    if (const auto* b = std::get_if<Binary>(&e->node)) {
      emit_definedness(b->lhs, condition);
      emit_definedness(b->rhs, condition);
      if (b->op == BinOp::Div || b->op == BinOp::Mod)
        assert_implied(condition, "(distinct " + expr_str(b->rhs) + " 0)");
      is_arith_node = is_arith(b->op);
    } else if (const auto* u = std::get_if<Unary>(&e->node)) {
      emit_definedness(u->operand, condition);
      is_arith_node = u->op == UnOp::Neg;
    }
    if (is_arith_node) {
      std::string term = expr_str(e);
      std::ostringstream bound;
      bound << "(and (<= ";
      emit_int(bound, cs_.domain.int_min);
      bound << " " << term << ") (<= " << term << " ";
      emit_int(bound, cs_.domain.int_max);
      bound << "))";
      assert_implied(condition, bound.str());
    }
  }

  // Guard conjuncts are reached one by one, each under the prefix before it.
  std::string emit_guard_definedness(const std::vector<ExprPtr>& guard) {
    std::string prefix = "true";
    for (const auto& g : guard) {
      emit_definedness(g, prefix);
      std::string gs = expr_str(g);
      prefix = prefix == "true" ? gs : "(and " + prefix + " " + gs + ")";
    }
    return prefix;  // the full guard condition
  }

  std::string placeholder(const std::string& var) {
    Ty ty = Ty::Int;
    for (const auto& v : cs_.variables)
      if (v.name == var) ty = v.type;
    Value ph = inert_value(ty, cs_.domain);
    if (ph.is_bool()) return ph.as_bool() ? "true" : "false";
    std::ostringstream out;
    emit_int(out, ph.as_int());
    return out.str();
  }

  void emit_constraint(const Constraint& c) {
    if (const auto* eq = std::get_if<EqC>(&c)) {
      std::string g = emit_guard_definedness(eq->guard);
      emit_definedness(eq->rhs, g);
      if (g == "true") {
        body_ << "(assert (= " << eq->var << " " << expr_str(eq->rhs) << "))\n";
      } else {
        body_ << "(assert (= " << eq->var << " (ite " << g << " " << expr_str(eq->rhs) << " "
              << placeholder(eq->var) << ")))\n";
      }
    } else if (const auto* phi = std::get_if<PhiEqC>(&c)) {
      std::string g = emit_guard_definedness(phi->guard);
      body_ << "(assert (= " << phi->var << " (ite " << g << " " << phi->then_var << " "
            << phi->else_var << ")))\n";
    } else if (const auto* tie = std::get_if<InputTieC>(&c)) {
      body_ << "(assert (= " << tie->var << " " << tie->var_m << "))\n";
    } else if (const auto* diff = std::get_if<OutputDiffersC>(&c)) {
      body_ << "(assert (or";
      for (const auto& [a, b] : diff->pairs) body_ << " (distinct " << a << " " << b << ")";
      body_ << "))\n";
    } else if (const auto* blocking = std::get_if<BlockingC>(&c)) {
      body_ << "(assert (not (and";
      for (const auto& [name, val] : blocking->inputs) {
        body_ << " (= " << name << " ";
        if (val.is_int())
          emit_int(body_, val.as_int());
        else
          body_ << (val.as_bool() ? "true" : "false");
        body_ << ")";
      }
      body_ << ")))\n";
    } else {
      const auto& flag = std::get<FlagValueC>(c);
      body_ << "(assert (= " << flag.var << " " << (flag.value ? "true" : "false") << "))\n";
    }
  }

  const ConstraintSystem& cs_;
  std::ostringstream body_;
  bool uses_div_ = false;
};

}  // namespace

std::string export_smtlib(const ConstraintSystem& cs) { return Emitter(cs).run(); }

}  // namespace mutdiff

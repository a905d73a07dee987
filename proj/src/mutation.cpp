#include "mutdiff/mutation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mutdiff/errors.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/pretty.hpp"

namespace mutdiff {

std::string to_string(MutationOperatorClass c) {
  switch (c) {
    case MutationOperatorClass::AOR: return "AOR";
    case MutationOperatorClass::ROR: return "ROR";
    case MutationOperatorClass::COR: return "COR";
    case MutationOperatorClass::UOI: return "UOI";
    case MutationOperatorClass::UOD: return "UOD";
    case MutationOperatorClass::CRP: return "CRP";
    case MutationOperatorClass::VRP: return "VRP";
  }
  return "?";
}

std::optional<MutationOperatorClass> operator_class_from_string(const std::string& s) {
  if (s == "AOR") return MutationOperatorClass::AOR;
  if (s == "ROR") return MutationOperatorClass::ROR;
  if (s == "COR") return MutationOperatorClass::COR;
  if (s == "UOI") return MutationOperatorClass::UOI;
  if (s == "UOD") return MutationOperatorClass::UOD;
  if (s == "CRP") return MutationOperatorClass::CRP;
  if (s == "VRP") return MutationOperatorClass::VRP;
  return std::nullopt;
}

std::set<MutationOperatorClass> default_operator_classes() {
  return {MutationOperatorClass::AOR, MutationOperatorClass::ROR, MutationOperatorClass::COR,
          MutationOperatorClass::UOI, MutationOperatorClass::UOD, MutationOperatorClass::CRP};
}

namespace {

const BinOp kArithTable[] = {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Mod};
const BinOp kRelTable[] = {BinOp::Lt, BinOp::Le, BinOp::Gt, BinOp::Ge, BinOp::Eq, BinOp::Ne};
const BinOp kLogicTable[] = {BinOp::And, BinOp::Or};

/// Type of an operator-bearing expression, derivable without an environment.
std::optional<Ty> composite_type(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    if (is_arith(b->op)) return Ty::Int;
    return Ty::Bool;  // relational and logical
  }
  if (const auto* u = std::get_if<Unary>(&e.node))
    return u->op == UnOp::Neg ? Ty::Int : Ty::Bool;
  return std::nullopt;
}

ExprPtr build_replacement(const ExprPtr& target, const MutationInstance& inst) {
  if (const auto* rb = std::get_if<ReplaceBinaryOp>(&inst)) {
    const auto* bin = std::get_if<Binary>(&target->node);
    if (!bin) throw InvalidLocation("operator replacement requires a binary expression");
    if (bin->op == rb->new_op)
      throw NotAMutation("replacing '" + to_string(bin->op) + "' with itself");
    return make_binary(rb->new_op, bin->lhs, bin->rhs, target->loc);
  }
  if (const auto* iu = std::get_if<InsertUnaryOp>(&inst))
    return make_unary(iu->op, target, target->loc);
  if (std::holds_alternative<DeleteUnaryOp>(inst)) {
    const auto* un = std::get_if<Unary>(&target->node);
    if (!un) throw InvalidLocation("unary deletion requires a unary expression");
    return un->operand;
  }
  if (const auto* ri = std::get_if<ReplaceIntConstant>(&inst)) {
    const auto* ic = std::get_if<IntConst>(&target->node);
    if (!ic) throw InvalidLocation("constant replacement requires an integer constant");
    if (ic->value == ri->new_value) throw NotAMutation("constant is unchanged");
    return make_int(ri->new_value, target->loc);
  }
  if (const auto* rbc = std::get_if<ReplaceBoolConstant>(&inst)) {
    const auto* bc = std::get_if<BoolConst>(&target->node);
    if (!bc) throw InvalidLocation("constant replacement requires a boolean constant");
    if (bc->value == rbc->new_value) throw NotAMutation("constant is unchanged");
    return make_bool(rbc->new_value, target->loc);
  }
  const auto& rv = std::get<ReplaceVariable>(inst);
  const auto* var = std::get_if<VarRef>(&target->node);
  if (!var) throw InvalidLocation("variable replacement requires a variable reference");
  if (var->name == rv.new_name) throw NotAMutation("variable is unchanged");
  return make_var(rv.new_name, target->loc);
}

}  // namespace

Program apply_mutation(const Program& p, const AstPath& location, const MutationInstance& inst) {
  ExprPtr target = expr_at(p, location);
  ExprPtr replacement = build_replacement(target, inst);
  if (equal(target, replacement)) throw NotAMutation("replacement is identical to the original");
  Program mutated = replace_expr(p, location, replacement);
  try {
    check_program(mutated);
  } catch (const Error& e) {
    throw IllTypedMutation(std::string(e.what()) + " at " + to_string(location));
  }
  return mutated;
}

std::vector<Mutant> generate_mutants(const Program& p,
                                     const std::set<MutationOperatorClass>& enabled) {
  // Declared variables in declaration order, for VRP.
  std::vector<std::pair<std::string, Ty>> declared;
  for (const auto& in : p.inputs) declared.emplace_back(in.name, in.type);
  for (const auto& out : p.outputs) declared.emplace_back(out.name, out.type);
  std::function<void(const std::vector<StmtPtr>&)> collect = [&](const std::vector<StmtPtr>& b) {
    for (const auto& s : b) {
      if (const auto* d = std::get_if<Decl>(&s->node)) {
        bool known = false;
        for (const auto& [n, t] : declared) known |= n == d->name;
        if (!known) declared.emplace_back(d->name, d->type);
      } else if (const auto* f = std::get_if<If>(&s->node)) {
        collect(f->then_body);
        collect(f->else_body);
      } else if (const auto* w = std::get_if<While>(&s->node)) {
        collect(w->body);
      }
    }
  };
  collect(p.body);

  std::vector<Mutant> out;
  std::set<std::string> seen;
  seen.insert(pretty_print(p));

  auto try_candidate = [&](const AstPath& path, const ExprPtr& node, MutationOperatorClass cls,
                           const MutationInstance& inst) {
    Program mutated;
    try {
      mutated = apply_mutation(p, path, inst);
    } catch (const NotAMutation&) {
      return;
    } catch (const IllTypedMutation&) {
      return;  // ill-typed candidates are discarded, never emitted
    }
    std::string key = pretty_print(mutated);
    if (!seen.insert(key).second) return;
    Mutant m;
    std::ostringstream id;
    id << "m" << out.size() + 1;
    m.id = id.str();
    m.base = p;
    m.location = path;
    m.operator_class = cls;
    m.original_fragment = pretty_print(node);
    m.mutated_fragment = pretty_print(expr_at(mutated, path));
    m.program = std::move(mutated);
    out.push_back(std::move(m));
  };

  for_each_expr(p, [&](const AstPath& path, const ExprPtr& node) {
    if (enabled.count(MutationOperatorClass::AOR)) {
      if (const auto* b = std::get_if<Binary>(&node->node); b && is_arith(b->op))
        for (BinOp op : kArithTable)
          if (op != b->op)
            try_candidate(path, node, MutationOperatorClass::AOR, ReplaceBinaryOp{op});
    }
    if (enabled.count(MutationOperatorClass::ROR)) {
      if (const auto* b = std::get_if<Binary>(&node->node); b && is_rel(b->op))
        for (BinOp op : kRelTable)
          if (op != b->op)
            try_candidate(path, node, MutationOperatorClass::ROR, ReplaceBinaryOp{op});
    }
    if (enabled.count(MutationOperatorClass::COR)) {
      if (const auto* b = std::get_if<Binary>(&node->node); b && is_logic(b->op))
        for (BinOp op : kLogicTable)
          if (op != b->op)
            try_candidate(path, node, MutationOperatorClass::COR, ReplaceBinaryOp{op});
    }
    if (enabled.count(MutationOperatorClass::UOI)) {
      // Insertion targets operator-bearing expressions only; negating bare
      // constants is CRP's job and bare variables have no operator to key on.
      if (auto ty = composite_type(*node)) {
        UnOp op = *ty == Ty::Int ? UnOp::Neg : UnOp::Not;
        try_candidate(path, node, MutationOperatorClass::UOI, InsertUnaryOp{op});
      }
    }
    if (enabled.count(MutationOperatorClass::UOD)) {
      if (std::holds_alternative<Unary>(node->node))
        try_candidate(path, node, MutationOperatorClass::UOD, DeleteUnaryOp{});
    }
    if (enabled.count(MutationOperatorClass::CRP)) {
      if (const auto* ic = std::get_if<IntConst>(&node->node)) {
        const std::int64_t c = ic->value;
        const std::int64_t candidates[] = {c + 1, c - 1, 0, 1, -c};
        std::vector<std::int64_t> applied;
        for (std::int64_t v : candidates) {
          if (v == c) continue;
          if (std::find(applied.begin(), applied.end(), v) != applied.end()) continue;
          applied.push_back(v);
          try_candidate(path, node, MutationOperatorClass::CRP, ReplaceIntConstant{v});
        }
      } else if (const auto* bc = std::get_if<BoolConst>(&node->node)) {
        try_candidate(path, node, MutationOperatorClass::CRP, ReplaceBoolConstant{!bc->value});
      }
    }
    if (enabled.count(MutationOperatorClass::VRP)) {
      if (const auto* v = std::get_if<VarRef>(&node->node)) {
        for (const auto& [name, ty] : declared) {
          (void)ty;
          if (name != v->name)
            try_candidate(path, node, MutationOperatorClass::VRP, ReplaceVariable{name});
        }
      }
    }
  });
  return out;
}

std::string mutants_to_json(const std::vector<Mutant>& mutants) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& m : mutants) {
    nlohmann::ordered_json rec;
    rec["id"] = m.id;
    rec["operator_class"] = to_string(m.operator_class);
    rec["location"] = to_string(m.location);
    rec["original"] = m.original_fragment;
    rec["mutated"] = m.mutated_fragment;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2);
}

}  // namespace mutdiff

#include "mutdiff/ssa.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mutdiff/errors.hpp"
#include "mutdiff/eval.hpp"
#include "mutdiff/pretty.hpp"

namespace mutdiff {

namespace {

ExprPtr rename_expr(const ExprPtr& e, const std::string& suffix) {
  if (const auto* v = std::get_if<VarRef>(&e->node)) return make_var(v->name + suffix, e->loc);
  if (const auto* b = std::get_if<Binary>(&e->node))
    return make_binary(b->op, rename_expr(b->lhs, suffix), rename_expr(b->rhs, suffix), e->loc);
  if (const auto* u = std::get_if<Unary>(&e->node))
    return make_unary(u->op, rename_expr(u->operand, suffix), e->loc);
  return e;
}

void collect_vars(const ExprPtr& e, std::vector<std::string>& out) {
  if (const auto* v = std::get_if<VarRef>(&e->node)) {
    out.push_back(v->name);
  } else if (const auto* b = std::get_if<Binary>(&e->node)) {
    collect_vars(b->lhs, out);
    collect_vars(b->rhs, out);
  } else if (const auto* u = std::get_if<Unary>(&e->node)) {
    collect_vars(u->operand, out);
  }
}

struct PendingAssignment {
  SsaAssignment assignment;
  int level;
  int seq;
};

class SsaBuilder {
 public:
  explicit SsaBuilder(const LoopFreeProgram& lfp) : lfp_(lfp) {}

  SsaProgram run() {
    const Program& p = lfp_.program;
    for (const auto& in : p.inputs) {
      types_[in.name] = in.type;
      std::string name = in.name + "_0";
      current_[in.name] = name;
      validity_[name] = 0;
      result_.input_versions[in.name] = name;
      result_.var_types[name] = in.type;
    }
    for (const auto& out : p.outputs) {
      types_[out.name] = out.type;
      result_.output_bases.push_back(out.name);
    }
    result_.flag_bases = lfp_.loop_flags;

    convert_block(p.body);

    for (const auto& [base, name] : current_) result_.final_versions[base] = name;
    order_assignments();
    return std::move(result_);
  }

 private:
  //
  // Version bookkeeping. validity_[v] is the guard-stack depth D such that,
  // for any execution whose path agrees with the first D enclosing guards,
  // v evaluates to the true value of its base variable at the merge points
  // from v's creation outward. Direct assignments are valid only at their
  // own depth; a Phi that merges against a shallower version inherits that
  // version's validity, which is what lets an already-complete merge skip
  // re-merging at outer conditionals.
  //

  std::string define(const std::string& base, Ty ty, std::variant<ExprPtr, SsaPhi> rhs,
                     std::vector<ExprPtr> guard, int level, int validity) {
    int ver = ++next_version_[base];
    std::string name = base + "_" + std::to_string(ver);
    current_[base] = name;
    validity_[name] = validity;
    result_.var_types[name] = ty;
    if (!phi_index_.emplace(name, pending_.size()).second)
      throw std::logic_error("SSA name '" + name + "' assigned twice");
    pending_.push_back({SsaAssignment{name, ty, std::move(rhs), std::move(guard)}, level, seq_++});
    for (auto* rec : recorders_)
      if (std::find(rec->begin(), rec->end(), base) == rec->end()) rec->push_back(base);
    return name;
  }

  Ty type_of(const std::string& base, SourceLoc loc) const {
    auto it = types_.find(base);
    if (it == types_.end()) throw UseBeforeDef(loc.line, loc.col, base);
    return it->second;
  }

  ExprPtr subst(const ExprPtr& e) {
    if (const auto* v = std::get_if<VarRef>(&e->node)) {
      auto it = current_.find(v->name);
      if (it == current_.end()) throw UseBeforeDef(e->loc.line, e->loc.col, v->name);
      return make_var(it->second, e->loc);
    }
    if (const auto* b = std::get_if<Binary>(&e->node))
      return make_binary(b->op, subst(b->lhs), subst(b->rhs), e->loc);
    if (const auto* u = std::get_if<Unary>(&e->node))
      return make_unary(u->op, subst(u->operand), e->loc);
    return e;
  }

  // Enclosing guards plus the conditional's own guard, outermost first.
  std::vector<ExprPtr> full_guard(const ExprPtr& own_cond) const {
    std::vector<ExprPtr> g = guard_stack_;
    g.push_back(own_cond);
    return g;
  }

  void convert_block(const std::vector<StmtPtr>& body) {
    for (const auto& s : body) convert_stmt(s);
  }

  void convert_stmt(const StmtPtr& s) {
    int depth = static_cast<int>(guard_stack_.size());
    if (const auto* a = std::get_if<Assign>(&s->node)) {
      ExprPtr rhs = subst(a->value);
      define(a->target, type_of(a->target, s->loc), std::move(rhs), guard_stack_, depth, depth);
    } else if (const auto* d = std::get_if<Decl>(&s->node)) {
      types_.emplace(d->name, d->type);
      ExprPtr rhs = subst(d->init);
      define(d->name, d->type, std::move(rhs), guard_stack_, depth, depth);
    } else if (const auto* f = std::get_if<If>(&s->node)) {
      convert_if(*f, depth);
    } else {
      throw std::logic_error("to_ssa requires a loop-free program");
    }
  }

  void convert_if(const If& f, int depth) {
    ExprPtr cond = subst(f.cond);
    auto pre = current_;

    std::vector<std::string> then_changed;
    recorders_.push_back(&then_changed);
    guard_stack_.push_back(cond);
    convert_block(f.then_body);
    guard_stack_.pop_back();
    recorders_.pop_back();
    auto after_then = current_;

    current_ = pre;
    std::vector<std::string> else_changed;
    recorders_.push_back(&else_changed);
    guard_stack_.push_back(make_unary(UnOp::Not, cond, cond->loc));
    convert_block(f.else_body);
    guard_stack_.pop_back();
    recorders_.pop_back();
    auto after_else = current_;

    current_ = pre;
    std::vector<ExprPtr> guard = full_guard(cond);

    std::vector<std::string> merge_order = then_changed;
    for (const auto& base : else_changed)
      if (std::find(merge_order.begin(), merge_order.end(), base) == merge_order.end())
        merge_order.push_back(base);

    for (const auto& base : merge_order) {
      auto lookup = [&](const std::map<std::string, std::string>& m) -> std::optional<std::string> {
        auto it = m.find(base);
        if (it == m.end()) return std::nullopt;
        return it->second;
      };
      std::optional<std::string> v_pre = lookup(pre);
      std::optional<std::string> v_then = lookup(after_then);
      std::optional<std::string> v_else = lookup(after_else);
      bool then_changed_here = v_then != v_pre;
      bool else_changed_here = v_else != v_pre;
      Ty ty = types_.at(base);

      if (then_changed_here && else_changed_here) {
        // Both branches produced a value; merge them. Without a pre-version
        // the merged value only exists when one of the two branches ran,
        // which definite assignment already guarantees for any later read.
        int validity = validity_.at(*v_else) <= depth ? validity_.at(*v_else) : depth;
        define(base, ty, SsaPhi{guard, *v_then, *v_else}, {}, depth + 1, validity);
      } else if (then_changed_here) {
        if (!v_pre) {
          current_.erase(base);  // defined on one path only: unreadable after
          continue;
        }
        if (validity_.at(*v_then) <= depth) {
          current_[base] = *v_then;  // merge already carries the full path
          continue;
        }
        define(base, ty, SsaPhi{guard, *v_then, *v_pre}, {}, depth + 1, validity_.at(*v_pre));
      } else if (else_changed_here) {
        if (!v_pre) {
          current_.erase(base);
          continue;
        }
        if (validity_.at(*v_else) <= depth) {
          current_[base] = *v_else;
          continue;
        }
        define(base, ty, SsaPhi{guard, *v_pre, *v_else}, {}, depth + 1, validity_.at(*v_pre));
      }
    }
  }

  // Presents the assignments the way the conversion figures read: straight
  // line code first, then each conditional's group ordered by nesting level,
  // while never emitting a reference before its definition.
  void order_assignments() {
    std::size_t n = pending_.size();
    std::vector<std::vector<std::size_t>> dependents(n);
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> refs;
      for (const auto& g : pending_[i].assignment.guard) collect_vars(g, refs);
      if (const auto* e = std::get_if<ExprPtr>(&pending_[i].assignment.rhs)) {
        collect_vars(*e, refs);
      } else {
        const auto& phi = std::get<SsaPhi>(pending_[i].assignment.rhs);
        for (const auto& g : phi.guard) collect_vars(g, refs);
        refs.push_back(phi.then_var);
        refs.push_back(phi.else_var);
      }
      std::set<std::size_t> dep_idx;
      for (const auto& name : refs) {
        auto it = phi_index_.find(name);
        if (it != phi_index_.end()) dep_idx.insert(it->second);
      }
      for (std::size_t d : dep_idx) dependents[d].push_back(i);
      indegree[i] = dep_idx.size();
    }
    auto rank = [&](std::size_t i) {
      return std::make_pair(pending_[i].level, pending_[i].seq);
    };
    auto cmp = [&](std::size_t a, std::size_t b) { return rank(a) > rank(b); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
    for (std::size_t i = 0; i < n; ++i)
      if (indegree[i] == 0) ready.push(i);
    result_.assignments.reserve(n);
    while (!ready.empty()) {
      std::size_t i = ready.top();
      ready.pop();
      result_.assignments.push_back(std::move(pending_[i].assignment));
      for (std::size_t j : dependents[i])
        if (--indegree[j] == 0) ready.push(j);
    }
    if (result_.assignments.size() != n)
      throw std::logic_error("SSA def-use graph has a cycle");
  }

  const LoopFreeProgram& lfp_;
  SsaProgram result_;
  std::map<std::string, Ty> types_;            // base -> type
  std::map<std::string, int> next_version_;    // base -> last version used
  std::map<std::string, std::string> current_; // base -> current ssa name
  std::map<std::string, int> validity_;        // ssa name -> validity depth
  std::map<std::string, std::size_t> phi_index_;  // ssa name -> pending index
  std::vector<PendingAssignment> pending_;
  std::vector<ExprPtr> guard_stack_;
  std::vector<std::vector<std::string>*> recorders_;
  int seq_ = 0;
};

}  // namespace

SsaProgram to_ssa(const LoopFreeProgram& lfp) { return SsaBuilder(lfp).run(); }

ExprPtr guard_conjunction(const std::vector<ExprPtr>& guard) {
  if (guard.empty()) return make_bool(true);
  ExprPtr acc = guard.front();
  for (std::size_t i = 1; i < guard.size(); ++i)
    acc = make_binary(BinOp::And, acc, guard[i], guard[i]->loc);
  return acc;
}

Value inert_value(Ty ty, const DomainConfig& dom) {
  if (ty == Ty::Bool) return Value(false);
  return Value(std::clamp<std::int64_t>(0, dom.int_min, dom.int_max));
}

namespace {

std::vector<ExprPtr> rename_guard(const std::vector<ExprPtr>& guard, const std::string& suffix) {
  std::vector<ExprPtr> out;
  out.reserve(guard.size());
  for (const auto& g : guard) out.push_back(rename_expr(g, suffix));
  return out;
}

}  // namespace

SsaProgram rename_for_mutant(const SsaProgram& s) {
  const std::string suffix = "_M";
  SsaProgram out;
  out.output_bases = s.output_bases;
  out.flag_bases = s.flag_bases;
  for (const auto& a : s.assignments) {
    SsaAssignment r;
    r.target = a.target + suffix;
    r.type = a.type;
    r.guard = rename_guard(a.guard, suffix);
    if (const auto* e = std::get_if<ExprPtr>(&a.rhs)) {
      r.rhs = rename_expr(*e, suffix);
    } else {
      const auto& phi = std::get<SsaPhi>(a.rhs);
      r.rhs = SsaPhi{rename_guard(phi.guard, suffix), phi.then_var + suffix,
                     phi.else_var + suffix};
    }
    out.assignments.push_back(std::move(r));
  }
  for (const auto& [base, name] : s.input_versions) out.input_versions[base] = name + suffix;
  for (const auto& [base, name] : s.final_versions) out.final_versions[base] = name + suffix;
  for (const auto& [name, ty] : s.var_types) out.var_types[name + suffix] = ty;
  return out;
}

SsaEvalResult eval_ssa(const SsaProgram& s, const VariableEnvironment& input,
                       const DomainConfig& dom) {
  dom.validate();
  SsaEvalResult result;
  VariableEnvironment values;
  for (const auto& [base, name] : s.input_versions) {
    auto it = input.find(name);
    if (it == input.end())
      throw PreconditionViolation("input does not bind '" + name + "'");
    if (it->second.is_int() && !dom.contains(it->second.as_int()))
      throw PreconditionViolation("input '" + name + "' is outside the domain");
    values[name] = it->second;
    (void)base;
  }
  auto lookup = [&values](const std::string& name, SourceLoc loc) -> Value {
    auto it = values.find(name);
    if (it == values.end())
      throw std::logic_error("SSA variable '" + name + "' read before definition at line " +
                             std::to_string(loc.line));
    return it->second;
  };
  // Short-circuit conjunct scan: a conjunct is evaluated only when the whole
  // prefix held, which is exactly when concrete execution reaches it.
  auto guard_holds = [&](const std::vector<ExprPtr>& guard) {
    for (const auto& g : guard)
      if (!eval_expr(*g, lookup, dom).as_bool()) return false;
    return true;
  };
  try {
    for (const auto& a : s.assignments) {
      if (const auto* e = std::get_if<ExprPtr>(&a.rhs)) {
        values[a.target] =
            guard_holds(a.guard) ? eval_expr(**e, lookup, dom) : inert_value(a.type, dom);
      } else {
        const auto& phi = std::get<SsaPhi>(a.rhs);
        values[a.target] =
            guard_holds(phi.guard) ? lookup(phi.then_var, {}) : lookup(phi.else_var, {});
      }
    }
  } catch (const EvalAbort& abort) {
    result.kind = abort.kind == EvalFailureKind::DomainOverflow
                      ? SsaEvalResult::Kind::DomainOverflow
                      : SsaEvalResult::Kind::DivisionByZero;
    result.failure_loc = abort.loc;
    return result;
  }
  result.values = std::move(values);
  return result;
}

VariableEnvironment ssa_finals(const SsaProgram& s, const VariableEnvironment& values) {
  VariableEnvironment out;
  auto add = [&](const std::string& base) {
    auto fin = s.final_versions.find(base);
    if (fin == s.final_versions.end()) return;
    auto val = values.find(fin->second);
    if (val != values.end()) out[fin->second] = val->second;
  };
  for (const auto& base : s.output_bases) add(base);
  for (const auto& base : s.flag_bases) add(base);
  return out;
}

std::string pretty_print(const SsaProgram& s) {
  std::ostringstream out;
  for (const auto& a : s.assignments) {
    out << a.target << " = ";
    if (const auto* e = std::get_if<ExprPtr>(&a.rhs)) {
      out << pretty_print(*e);
    } else {
      const auto& phi = std::get<SsaPhi>(a.rhs);
      out << "Phi((" << pretty_print(guard_conjunction(phi.guard)) << "), " << phi.then_var
          << ", " << phi.else_var << ")";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace mutdiff

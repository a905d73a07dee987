#include "mutdiff/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mutdiff/eval.hpp"

namespace mutdiff {

std::string to_string(SolveResult::Status s) {
  switch (s) {
    case SolveResult::Status::Solution: return "sat";
    case SolveResult::Status::Unsat: return "unsat";
    case SolveResult::Status::Timeout: return "timeout";
  }
  return "?";
}

namespace {

// Saturating interval arithmetic. The saturation bound is far above any
// admissible domain, so clamping never cuts off feasible values.
constexpr std::int64_t kSat = std::int64_t{1} << 62;

std::int64_t clamp_sat(__int128 v) {
  if (v > kSat) return kSat;
  if (v < -kSat) return -kSat;
  return static_cast<std::int64_t>(v);
}

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool singleton() const { return lo == hi; }
  bool contains(std::int64_t v) const { return v >= lo && v <= hi; }
};

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.lo > r.hi) return std::nullopt;
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval add_iv(const Interval& a, const Interval& b) {
  return {clamp_sat(static_cast<__int128>(a.lo) + b.lo),
          clamp_sat(static_cast<__int128>(a.hi) + b.hi)};
}

Interval sub_iv(const Interval& a, const Interval& b) {
  return {clamp_sat(static_cast<__int128>(a.lo) - b.hi),
          clamp_sat(static_cast<__int128>(a.hi) - b.lo)};
}

Interval mul_iv(const Interval& a, const Interval& b) {
  __int128 c[4] = {static_cast<__int128>(a.lo) * b.lo, static_cast<__int128>(a.lo) * b.hi,
                   static_cast<__int128>(a.hi) * b.lo, static_cast<__int128>(a.hi) * b.hi};
  __int128 lo = c[0], hi = c[0];
  for (__int128 v : c) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {clamp_sat(lo), clamp_sat(hi)};
}

std::int64_t tdiv(std::int64_t a, std::int64_t b) { return a / b; }  // C++ truncates toward zero

// Division hull over divisor values excluding zero; nullopt when the divisor
// can only be zero (every point infeasible).
std::optional<Interval> div_iv(const Interval& a, const Interval& b) {
  if (b.lo == 0 && b.hi == 0) return std::nullopt;
  std::vector<std::int64_t> divisors;
  if (b.lo != 0) divisors.push_back(b.lo);
  if (b.hi != 0) divisors.push_back(b.hi);
  if (b.contains(1)) divisors.push_back(1);
  if (b.contains(-1)) divisors.push_back(-1);
  bool first = true;
  Interval r{0, 0};
  for (std::int64_t d : divisors) {
    for (std::int64_t n : {a.lo, a.hi}) {
      std::int64_t q = tdiv(n, d);
      if (first) {
        r = {q, q};
        first = false;
      } else {
        r = hull(r, {q, q});
      }
    }
  }
  // Quotients through zero: if the dividend interval spans 0 the quotient
  // can be 0 regardless of divisor.
  if (a.contains(0)) r = hull(r, {0, 0});
  return r;
}

std::optional<Interval> mod_iv(const Interval& a, const Interval& b) {
  if (b.lo == 0 && b.hi == 0) return std::nullopt;
  std::int64_t max_abs_divisor = std::max(std::llabs(b.lo), std::llabs(b.hi));
  std::int64_t m = max_abs_divisor - 1;
  std::int64_t max_abs_dividend = std::max(std::llabs(a.lo), std::llabs(a.hi));
  m = std::min(m, max_abs_dividend);
  Interval r{-m, m};
  if (a.lo >= 0) r.lo = 0;  // remainder takes the dividend's sign
  if (a.hi <= 0) r.hi = 0;
  return r;
}

const Interval kBoolAny{0, 1};
const Interval kTrue{1, 1};
const Interval kFalse{0, 0};

Interval cmp_iv(bool can_false, bool can_true) {
  if (can_false && can_true) return kBoolAny;
  return can_true ? kTrue : kFalse;
}

class Solver {
 public:
  Solver(const ConstraintSystem& cs, std::chrono::steady_clock::time_point deadline,
         const std::optional<std::vector<std::int64_t>>& resume_after)
      : cs_(cs), deadline_(deadline), resume_after_(resume_after) {
    cs_.domain.validate();
    build_plan();
    if (resume_after_ && resume_after_->size() != search_vars_.size())
      throw PreconditionViolation("resume key does not match the searched variables");
  }

  SolveResult run() {
    SolveResult result;
    std::vector<Interval> box(search_vars_.size());
    for (std::size_t i = 0; i < search_vars_.size(); ++i) box[i] = domain_of(search_vars_[i]);
    switch (search(box)) {
      case Outcome::Found: {
        result.status = SolveResult::Status::Solution;
        result.assignment = solution_;
        result.search_key = solution_key_;
        if (auto violation = check_solution(cs_, result.assignment))
          throw std::logic_error("solver produced an invalid solution: " + *violation);
        break;
      }
      case Outcome::Exhausted: result.status = SolveResult::Status::Unsat; break;
      case Outcome::TimedOut: result.status = SolveResult::Status::Timeout; break;
    }
    return result;
  }

 private:
  enum class Outcome { Found, Exhausted, TimedOut };

  struct Def {
    enum class Kind { Expr, Phi, Copy } kind = Kind::Expr;
    std::size_t var = 0;        // defined variable index
    const EqC* eq = nullptr;    // Kind::Expr
    const PhiEqC* phi = nullptr;  // Kind::Phi
    std::size_t copy_of = 0;    // Kind::Copy
  };

  std::size_t var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw PreconditionViolation("constraint references undeclared variable '" + name + "'");
    return it->second;
  }

  Interval domain_of(std::size_t idx) const {
    if (cs_.variables[idx].type == Ty::Bool) return kBoolAny;
    return {cs_.domain.int_min, cs_.domain.int_max};
  }

  void collect_refs(const ExprPtr& e, std::set<std::size_t>& out) const {
    if (const auto* v = std::get_if<VarRef>(&e->node)) {
      out.insert(var_index(v->name));
    } else if (const auto* b = std::get_if<Binary>(&e->node)) {
      collect_refs(b->lhs, out);
      collect_refs(b->rhs, out);
    } else if (const auto* u = std::get_if<Unary>(&e->node)) {
      collect_refs(u->operand, out);
    }
  }

  // Picks one defining constraint per variable (first writer wins); the rest
  // become checks. Definitions whose dependency graph is cyclic are demoted
  // to checks and their variables searched directly, which keeps the solver
  // complete on non-functional systems.
  void build_plan() {
    for (std::size_t i = 0; i < cs_.variables.size(); ++i) {
      if (!index_.emplace(cs_.variables[i].name, i).second)
        throw PreconditionViolation("variable '" + cs_.variables[i].name + "' declared twice");
    }
    std::vector<std::optional<Def>> def_of(cs_.variables.size());
    for (const auto& c : cs_.constraints) {
      if (const auto* eq = std::get_if<EqC>(&c)) {
        std::size_t v = var_index(eq->var);
        std::set<std::size_t> refs;
        collect_refs(eq->rhs, refs);
        for (const auto& g : eq->guard) collect_refs(g, refs);
        if (!def_of[v] && !refs.count(v)) def_of[v] = Def{Def::Kind::Expr, v, eq, nullptr, 0};
      } else if (const auto* phi = std::get_if<PhiEqC>(&c)) {
        std::size_t v = var_index(phi->var);
        std::set<std::size_t> refs;
        for (const auto& g : phi->guard) collect_refs(g, refs);
        refs.insert(var_index(phi->then_var));
        refs.insert(var_index(phi->else_var));
        if (!def_of[v] && !refs.count(v)) def_of[v] = Def{Def::Kind::Phi, v, nullptr, phi, 0};
      } else if (const auto* tie = std::get_if<InputTieC>(&c)) {
        std::size_t a = var_index(tie->var);
        std::size_t b = var_index(tie->var_m);
        if (!def_of[b] && a != b)
          def_of[b] = Def{Def::Kind::Copy, b, nullptr, nullptr, a};
        else if (!def_of[a] && a != b)
          def_of[a] = Def{Def::Kind::Copy, a, nullptr, nullptr, b};
      }
    }

    // Topological order over definitions; cycle members are demoted.
    std::vector<std::set<std::size_t>> deps(cs_.variables.size());
    for (std::size_t v = 0; v < def_of.size(); ++v) {
      if (!def_of[v]) continue;
      const Def& d = *def_of[v];
      if (d.kind == Def::Kind::Expr) {
        collect_refs(d.eq->rhs, deps[v]);
        for (const auto& g : d.eq->guard) collect_refs(g, deps[v]);
      } else if (d.kind == Def::Kind::Phi) {
        for (const auto& g : d.phi->guard) collect_refs(g, deps[v]);
        deps[v].insert(var_index(d.phi->then_var));
        deps[v].insert(var_index(d.phi->else_var));
      } else {
        deps[v].insert(d.copy_of);
      }
    }
    std::vector<int> state(cs_.variables.size(), 0);  // 0 unseen, 1 visiting, 2 done
    std::vector<std::size_t> order;
    std::function<bool(std::size_t)> visit = [&](std::size_t v) -> bool {
      if (!def_of[v]) return true;  // search var: always available
      if (state[v] == 2) return true;
      if (state[v] == 1) return false;  // cycle
      state[v] = 1;
      for (std::size_t d : deps[v]) {
        if (!visit(d)) {
          state[v] = 2;
          def_of[v] = std::nullopt;  // demote to search
          return true;
        }
      }
      state[v] = 2;
      order.push_back(v);
      return true;
    };
    for (std::size_t v = 0; v < def_of.size(); ++v) visit(v);

    for (std::size_t v : order)
      if (def_of[v]) plan_.push_back(*def_of[v]);
    for (std::size_t v = 0; v < def_of.size(); ++v)
      if (!def_of[v]) search_vars_.push_back(v);

    std::set<const void*> defining;
    for (const auto& d : plan_) {
      if (d.kind == Def::Kind::Expr) defining.insert(d.eq);
      if (d.kind == Def::Kind::Phi) defining.insert(d.phi);
    }
    for (const auto& c : cs_.constraints) {
      const void* addr = std::visit([](const auto& x) -> const void* { return &x; }, c);
      bool is_def = defining.count(addr) != 0;
      if (const auto* tie = std::get_if<InputTieC>(&c)) {
        // A tie acts as a definition when one side is plan-computed.
        std::size_t a = var_index(tie->var), b = var_index(tie->var_m);
        bool covered = false;
        for (const auto& d : plan_)
          if (d.kind == Def::Kind::Copy && (d.var == a || d.var == b)) covered = true;
        if (covered) continue;
      }
      if (!is_def) checks_.push_back(&c);
    }
  }

  // --- interval propagation -------------------------------------------------

  std::optional<Interval> expr_interval(const ExprPtr& e,
                                        const std::vector<std::optional<Interval>>& ivals) const {
    if (const auto* ic = std::get_if<IntConst>(&e->node)) {
      if (!cs_.domain.contains(ic->value)) return std::nullopt;  // constant never evaluates
      return Interval{ic->value, ic->value};
    }
    if (const auto* bc = std::get_if<BoolConst>(&e->node))
      return bc->value ? kTrue : kFalse;
    if (const auto* v = std::get_if<VarRef>(&e->node)) return ivals[var_index(v->name)];
    if (const auto* u = std::get_if<Unary>(&e->node)) {
      auto o = expr_interval(u->operand, ivals);
      if (!o) return std::nullopt;
      if (u->op == UnOp::Neg) {
        Interval r{clamp_sat(-static_cast<__int128>(o->hi)), clamp_sat(-static_cast<__int128>(o->lo))};
        return intersect(r, {cs_.domain.int_min, cs_.domain.int_max});
      }
      if (o->singleton()) return o->lo != 0 ? kFalse : kTrue;
      return kBoolAny;
    }
    const auto& b = std::get<Binary>(e->node);
    auto lhs = expr_interval(b.lhs, ivals);
    auto rhs = expr_interval(b.rhs, ivals);
    if (!lhs || !rhs) return std::nullopt;
    const Interval dom{cs_.domain.int_min, cs_.domain.int_max};
    switch (b.op) {
      case BinOp::Add: return intersect(add_iv(*lhs, *rhs), dom);
      case BinOp::Sub: return intersect(sub_iv(*lhs, *rhs), dom);
      case BinOp::Mul: return intersect(mul_iv(*lhs, *rhs), dom);
      case BinOp::Div: {
        auto r = div_iv(*lhs, *rhs);
        if (!r) return std::nullopt;
        return intersect(*r, dom);
      }
      case BinOp::Mod: {
        auto r = mod_iv(*lhs, *rhs);
        if (!r) return std::nullopt;
        return intersect(*r, dom);
      }
      case BinOp::Lt: return cmp_iv(lhs->hi >= rhs->lo, lhs->lo < rhs->hi);
      case BinOp::Le: return cmp_iv(lhs->hi > rhs->lo, lhs->lo <= rhs->hi);
      case BinOp::Gt: return cmp_iv(lhs->lo <= rhs->hi, lhs->hi > rhs->lo);
      case BinOp::Ge: return cmp_iv(lhs->lo < rhs->hi, lhs->hi >= rhs->lo);
      case BinOp::Eq:
        if (lhs->singleton() && rhs->singleton()) return lhs->lo == rhs->lo ? kTrue : kFalse;
        if (lhs->hi < rhs->lo || rhs->hi < lhs->lo) return kFalse;
        return kBoolAny;
      case BinOp::Ne:
        if (lhs->singleton() && rhs->singleton()) return lhs->lo != rhs->lo ? kTrue : kFalse;
        if (lhs->hi < rhs->lo || rhs->hi < lhs->lo) return kTrue;
        return kBoolAny;
      case BinOp::And:
        if (lhs->hi == 0 || rhs->hi == 0) return kFalse;
        if (lhs->lo == 1 && rhs->lo == 1) return kTrue;
        return kBoolAny;
      case BinOp::Or:
        if (lhs->lo == 1 || rhs->lo == 1) return kTrue;
        if (lhs->hi == 0 && rhs->hi == 0) return kFalse;
        return kBoolAny;
    }
    return std::nullopt;
  }

  enum class GuardState { True, False, Unknown, AllFail };

  // Interval verdict for a guard conjunct list. "AllFail" means every point
  // in the box reaches a conjunct whose evaluation always aborts, which
  // makes the whole box infeasible.
  GuardState guard_state(const std::vector<ExprPtr>& guard,
                         const std::vector<std::optional<Interval>>& ivals) const {
    bool prefix_sure = true;
    for (const auto& g : guard) {
      auto iv = expr_interval(g, ivals);
      if (!iv) return prefix_sure ? GuardState::AllFail : GuardState::False;
      if (iv->hi == 0) return GuardState::False;  // feasible points short-circuit
      if (iv->lo != 1) prefix_sure = false;
    }
    return prefix_sure ? GuardState::True : GuardState::Unknown;
  }

  Interval inert_interval(std::size_t var) const {
    Value v = inert_value(cs_.variables[var].type, cs_.domain);
    std::int64_t raw = v.is_int() ? v.as_int() : (v.as_bool() ? 1 : 0);
    return {raw, raw};
  }

  // Conservatively decides whether the box may still contain a solution.
  bool box_feasible(const std::vector<Interval>& box) const {
    std::vector<std::optional<Interval>> ivals(cs_.variables.size());
    for (std::size_t i = 0; i < search_vars_.size(); ++i) ivals[search_vars_[i]] = box[i];
    for (const auto& d : plan_) {
      std::optional<Interval> r;
      if (d.kind == Def::Kind::Expr) {
        GuardState gs = guard_state(d.eq->guard, ivals);
        if (gs == GuardState::AllFail) return false;
        auto rhs = expr_interval(d.eq->rhs, ivals);
        if (rhs) rhs = intersect(*rhs, domain_of(d.var));
        Interval ph = inert_interval(d.var);
        if (gs == GuardState::True) {
          if (!rhs) return false;  // reached and never evaluates
          r = rhs;
        } else if (gs == GuardState::False) {
          r = ph;
        } else {
          r = rhs ? hull(*rhs, ph) : ph;
        }
      } else if (d.kind == Def::Kind::Phi) {
        GuardState gs = guard_state(d.phi->guard, ivals);
        if (gs == GuardState::AllFail) return false;
        auto t = ivals[var_index(d.phi->then_var)];
        auto e = ivals[var_index(d.phi->else_var)];
        if (gs == GuardState::True) r = t;
        else if (gs == GuardState::False) r = e;
        else if (t && e) r = hull(*t, *e);
        else r = t ? t : e;
        if (!r) return false;
        r = intersect(*r, domain_of(d.var));
      } else {
        r = ivals[d.copy_of];
        if (!r) return false;
        r = intersect(*r, domain_of(d.var));
      }
      if (!r) return false;
      ivals[d.var] = r;
    }
    for (const Constraint* c : checks_) {
      if (const auto* eq = std::get_if<EqC>(c)) {
        GuardState gs = guard_state(eq->guard, ivals);
        if (gs == GuardState::AllFail) return false;
        auto v = ivals[var_index(eq->var)];
        if (!v) continue;
        auto rhs = expr_interval(eq->rhs, ivals);
        if (rhs) rhs = intersect(*rhs, *v);
        Interval ph = inert_interval(var_index(eq->var));
        bool ph_possible = v->contains(ph.lo);
        if (gs == GuardState::True) {
          if (!rhs) return false;
        } else if (gs == GuardState::False) {
          if (!ph_possible) return false;
        } else if (!rhs && !ph_possible) {
          return false;
        }
      } else if (const auto* phi = std::get_if<PhiEqC>(c)) {
        if (guard_state(phi->guard, ivals) == GuardState::AllFail) return false;
      } else if (const auto* tie = std::get_if<InputTieC>(c)) {
        auto a = ivals[var_index(tie->var)];
        auto b = ivals[var_index(tie->var_m)];
        if (a && b && !intersect(*a, *b)) return false;
      } else if (const auto* diff = std::get_if<OutputDiffersC>(c)) {
        bool may_differ = false;
        for (const auto& [x, y] : diff->pairs) {
          auto a = ivals[var_index(x)];
          auto b = ivals[var_index(y)];
          if (!a || !b || !a->singleton() || !b->singleton() || a->lo != b->lo)
            may_differ = true;
        }
        if (!may_differ) return false;
      } else if (const auto* flag = std::get_if<FlagValueC>(c)) {
        auto v = ivals[var_index(flag->var)];
        if (v && !v->contains(flag->value ? 1 : 0)) return false;
      } else if (const auto* blocking = std::get_if<BlockingC>(c)) {
        bool all_match = true;
        for (const auto& [name, val] : blocking->inputs) {
          auto v = ivals[var_index(name)];
          std::int64_t want = val.is_int() ? val.as_int() : (val.as_bool() ? 1 : 0);
          if (!v || !v->singleton() || v->lo != want) all_match = false;
        }
        if (all_match) return false;
      }
    }
    return true;
  }

  // --- concrete leaf evaluation ----------------------------------------------

  bool leaf_satisfies(const std::vector<Interval>& box) {
    VariableEnvironment values;
    std::vector<std::int64_t> key(box.size());
    for (std::size_t i = 0; i < search_vars_.size(); ++i) {
      const VarDecl& v = cs_.variables[search_vars_[i]];
      values[v.name] = v.type == Ty::Bool ? Value(box[i].lo != 0) : Value(box[i].lo);
      key[i] = box[i].lo;
    }
    auto lookup = [&values](const std::string& name, SourceLoc) -> Value {
      auto it = values.find(name);
      if (it == values.end())
        throw std::logic_error("solver evaluation order broken at '" + name + "'");
      return it->second;
    };
    auto guard_holds = [&](const std::vector<ExprPtr>& guard) {
      for (const auto& g : guard)
        if (!eval_expr(*g, lookup, cs_.domain).as_bool()) return false;
      return true;
    };
    try {
      for (const auto& d : plan_) {
        const VarDecl& v = cs_.variables[d.var];
        Value val;
        if (d.kind == Def::Kind::Expr) {
          val = guard_holds(d.eq->guard) ? eval_expr(*d.eq->rhs, lookup, cs_.domain)
                                         : inert_value(v.type, cs_.domain);
        } else if (d.kind == Def::Kind::Phi) {
          val = guard_holds(d.phi->guard) ? lookup(d.phi->then_var, {})
                                          : lookup(d.phi->else_var, {});
        } else {
          val = values.at(cs_.variables[d.copy_of].name);
        }
        if (val.type() != v.type) return false;
        values[v.name] = val;
      }
      for (const Constraint* c : checks_) {
        if (const auto* eq = std::get_if<EqC>(c)) {
          Value expected = guard_holds(eq->guard)
                               ? eval_expr(*eq->rhs, lookup, cs_.domain)
                               : inert_value(lookup(eq->var, {}).type(), cs_.domain);
          if (lookup(eq->var, {}) != expected) return false;
        } else if (const auto* phi = std::get_if<PhiEqC>(c)) {
          Value sel = guard_holds(phi->guard) ? lookup(phi->then_var, {})
                                              : lookup(phi->else_var, {});
          if (lookup(phi->var, {}) != sel) return false;
        } else if (const auto* tie = std::get_if<InputTieC>(c)) {
          if (lookup(tie->var, {}) != lookup(tie->var_m, {})) return false;
        } else if (const auto* diff = std::get_if<OutputDiffersC>(c)) {
          bool any = false;
          for (const auto& [x, y] : diff->pairs) any |= lookup(x, {}) != lookup(y, {});
          if (!any) return false;
        } else if (const auto* flag = std::get_if<FlagValueC>(c)) {
          if (lookup(flag->var, {}).as_bool() != flag->value) return false;
        } else {
          const auto& blocking = std::get<BlockingC>(*c);
          bool all_match = true;
          for (const auto& [name, val] : blocking.inputs) all_match &= lookup(name, {}) == val;
          if (all_match) return false;
        }
      }
    } catch (const EvalAbort&) {
      return false;  // overflow or division by zero: infeasible point
    }
    solution_ = std::move(values);
    solution_key_ = std::move(key);
    return true;
  }

  // Lexicographic position of the box against the resume key: boxes whose
  // greatest tuple is at or below the key were exhausted by earlier rounds.
  bool box_at_or_below_resume(const std::vector<Interval>& box) const {
    if (!resume_after_) return false;
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (box[i].hi < (*resume_after_)[i]) return true;
      if (box[i].hi > (*resume_after_)[i]) return false;
    }
    return true;  // greatest corner equals the key exactly
  }

  Outcome search(std::vector<Interval>& box) {
    if (std::chrono::steady_clock::now() >= deadline_) return Outcome::TimedOut;
    if (box_at_or_below_resume(box)) return Outcome::Exhausted;
    // Propagation earns its keep on large boxes; small ones are cheaper to
    // enumerate directly.
    std::int64_t volume = 1;
    for (const auto& iv : box) {
      volume *= iv.hi - iv.lo + 1;
      if (volume > 64) break;
    }
    if (volume > 64 && !box_feasible(box)) return Outcome::Exhausted;
    std::size_t split = box.size();
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (!box[i].singleton()) {
        split = i;
        break;
      }
    }
    if (split == box.size())
      return leaf_satisfies(box) ? Outcome::Found : Outcome::Exhausted;
    Interval full = box[split];
    std::int64_t mid = full.lo + (full.hi - full.lo) / 2;
    box[split] = {full.lo, mid};
    Outcome lower = search(box);
    if (lower != Outcome::Exhausted) {
      box[split] = full;
      return lower;
    }
    box[split] = {mid + 1, full.hi};
    Outcome upper = search(box);
    box[split] = full;
    return upper;
  }

  ConstraintSystem cs_;
  std::chrono::steady_clock::time_point deadline_;
  std::optional<std::vector<std::int64_t>> resume_after_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Def> plan_;                 // topologically ordered definitions
  std::vector<std::size_t> search_vars_;  // variables enumerated by search
  std::vector<const Constraint*> checks_;
  VariableEnvironment solution_;
  std::vector<std::int64_t> solution_key_;
};

}  // namespace

SolveResult solve(const ConstraintSystem& cs, std::chrono::steady_clock::time_point deadline,
                  const std::optional<std::vector<std::int64_t>>& resume_after) {
  return Solver(cs, deadline, resume_after).run();
}

SolveResult solve(const ConstraintSystem& cs) {
  return solve(cs, std::chrono::steady_clock::now() + cs.domain.solver_timeout);
}

}  // namespace mutdiff

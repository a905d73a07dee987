#include "mutdiff/interp.hpp"

#include <stdexcept>

#include "mutdiff/errors.hpp"
#include "mutdiff/eval.hpp"

namespace mutdiff {

std::string to_string(ExecResult::Kind k) {
  switch (k) {
    case ExecResult::Kind::Normal: return "normal";
    case ExecResult::Kind::NonTermination: return "non-termination";
    case ExecResult::Kind::DomainOverflow: return "domain-overflow";
    case ExecResult::Kind::DivisionByZero: return "division-by-zero";
  }
  return "?";
}

namespace {

struct StepLimit {};

class Interpreter {
 public:
  Interpreter(const Program& p, const DomainConfig& dom, std::int64_t max_steps)
      : p_(p), dom_(dom), max_steps_(max_steps) {}

  ExecResult run(const VariableEnvironment& input) {
    ExecResult result;
    for (const auto& in : p_.inputs) {
      auto it = input.find(in.name);
      if (it == input.end())
        throw PreconditionViolation("input does not bind '" + in.name + "'");
      if (it->second.type() != in.type)
        throw PreconditionViolation("input '" + in.name + "' has the wrong type");
      if (it->second.is_int() && !dom_.contains(it->second.as_int()))
        throw PreconditionViolation("input '" + in.name + "' is outside the domain");
      env_[in.name] = it->second;
    }
    if (input.size() != p_.inputs.size())
      throw PreconditionViolation("input binds variables that are not declared inputs");

    try {
      exec_block(p_.body);
      result.kind = ExecResult::Kind::Normal;
      for (const auto& out : p_.outputs) {
        auto it = env_.find(out.name);
        if (it == env_.end())
          throw std::logic_error("output '" + out.name + "' unassigned after a normal run");
        result.outputs[out.name] = it->second;
      }
    } catch (const EvalAbort& abort) {
      result.kind = abort.kind == EvalFailureKind::DomainOverflow
                        ? ExecResult::Kind::DomainOverflow
                        : ExecResult::Kind::DivisionByZero;
      result.failure_loc = abort.loc;
    } catch (const StepLimit&) {
      result.kind = ExecResult::Kind::NonTermination;
    }
    result.loop_max_iters = loop_max_iters_;
    result.steps = steps_;
    return result;
  }

 private:
  Value lookup(const std::string& name, SourceLoc loc) const {
    auto it = env_.find(name);
    if (it == env_.end())
      // Definite-assignment analysis makes this unreachable for checked
      // programs; keep the runtime assert anyway.
      throw std::logic_error("read of unassigned variable '" + name + "' at line " +
                             std::to_string(loc.line));
    return it->second;
  }

  Value eval(const ExprPtr& e) {
    return eval_expr(
        *e, [this](const std::string& name, SourceLoc loc) { return lookup(name, loc); }, dom_);
  }

  void tick() {
    if (++steps_ > max_steps_) throw StepLimit{};
  }

  void exec_block(const std::vector<StmtPtr>& body) {
    for (const auto& s : body) exec_stmt(s);
  }

  void exec_stmt(const StmtPtr& s) {
    tick();
    if (const auto* a = std::get_if<Assign>(&s->node)) {
      env_[a->target] = eval(a->value);
    } else if (const auto* d = std::get_if<Decl>(&s->node)) {
      env_[d->name] = eval(d->init);
    } else if (const auto* f = std::get_if<If>(&s->node)) {
      if (eval(f->cond).as_bool())
        exec_block(f->then_body);
      else
        exec_block(f->else_body);
    } else {
      const auto& w = std::get<While>(s->node);
      std::int64_t iters = 0;
      while (eval(w.cond).as_bool()) {
        exec_block(w.body);
        ++iters;
        auto& best = loop_max_iters_[s->loc.line];
        if (iters > best) best = iters;
      }
      loop_max_iters_.try_emplace(s->loc.line, 0);
    }
  }

  const Program& p_;
  const DomainConfig& dom_;
  std::int64_t max_steps_;
  std::int64_t steps_ = 0;
  VariableEnvironment env_;
  std::map<int, std::int64_t> loop_max_iters_;
};

}  // namespace

ExecResult interpret(const Program& p, const VariableEnvironment& input, const DomainConfig& dom,
                     std::int64_t max_steps) {
  dom.validate();
  return Interpreter(p, dom, max_steps).run(input);
}

TestOutcome classify_test(const Program& p, const TestCase& tc, const DomainConfig& dom,
                          std::int64_t max_steps) {
  for (const auto& [name, value] : tc.expected_output) {
    bool known = false;
    for (const auto& out : p.outputs) known |= out.name == name;
    if (!known)
      throw PreconditionViolation("expected output binds '" + name + "', not a declared output");
    (void)value;
  }
  ExecResult result = interpret(p, tc.input, dom, max_steps);
  if (!result.normal()) return TestOutcome::Failing;
  for (const auto& [name, expected] : tc.expected_output) {
    auto it = result.outputs.find(name);
    if (it == result.outputs.end() || it->second != expected) return TestOutcome::Failing;
  }
  return TestOutcome::Passing;
}

}  // namespace mutdiff

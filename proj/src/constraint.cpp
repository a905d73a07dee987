#include "mutdiff/constraint.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "mutdiff/errors.hpp"
#include "mutdiff/eval.hpp"
#include "mutdiff/pretty.hpp"

namespace mutdiff {

ConstraintSystem encode(const SsaProgram& s, const DomainConfig& dom) {
  dom.validate();
  ConstraintSystem cs;
  cs.domain = dom;
  for (const auto& [base, name] : s.input_versions) {
    cs.variables.push_back({name, s.var_types.at(name)});
    cs.input_vars.push_back(name);
    cs.input_bases[name] = base;
  }
  for (const auto& a : s.assignments) {
    cs.variables.push_back({a.target, a.type});
    if (const auto* e = std::get_if<ExprPtr>(&a.rhs)) {
      cs.constraints.push_back(EqC{a.target, *e, a.guard});
    } else {
      const auto& phi = std::get<SsaPhi>(a.rhs);
      cs.constraints.push_back(PhiEqC{a.target, phi.guard, phi.then_var, phi.else_var});
    }
  }
  for (const auto& base : s.flag_bases) {
    auto it = s.final_versions.find(base);
    if (it != s.final_versions.end()) cs.flag_vars.push_back(it->second);
  }
  return cs;
}

ConstraintSystem build_joint_system(
    const ConstraintSystem& con_p, const ConstraintSystem& con_m,
    const std::vector<std::pair<std::string, std::string>>& input_ties,
    const std::vector<std::pair<std::string, std::string>>& output_pairs) {
  if (output_pairs.empty()) throw NoOutputs();
  ConstraintSystem cs;
  cs.domain = con_p.domain;
  cs.variables = con_p.variables;
  std::set<std::string> names;
  for (const auto& v : cs.variables) names.insert(v.name);
  for (const auto& v : con_m.variables) {
    if (names.count(v.name))
      throw PreconditionViolation("joint system has duplicate variable '" + v.name +
                                  "' (mutant side not renamed?)");
    cs.variables.push_back(v);
  }
  cs.constraints = con_p.constraints;
  cs.constraints.insert(cs.constraints.end(), con_m.constraints.begin(),
                        con_m.constraints.end());
  for (const auto& [x, x_m] : input_ties) cs.constraints.push_back(InputTieC{x, x_m});
  cs.constraints.push_back(OutputDiffersC{output_pairs});
  cs.input_vars = con_p.input_vars;
  cs.input_bases = con_p.input_bases;
  cs.output_pairs = output_pairs;
  cs.flag_vars = con_p.flag_vars;
  cs.flag_vars.insert(cs.flag_vars.end(), con_m.flag_vars.begin(), con_m.flag_vars.end());
  return cs;
}

namespace {

struct CheckAbort {
  std::string message;
};

Value checked_lookup(const VariableEnvironment& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw CheckAbort{"assignment does not bind '" + name + "'"};
  return it->second;
}

}  // namespace

std::optional<std::string> check_solution(const ConstraintSystem& cs,
                                          const VariableEnvironment& assignment) {
  try {
    for (const auto& v : cs.variables) {
      Value val = checked_lookup(assignment, v.name);
      if (val.type() != v.type) return "variable '" + v.name + "' has the wrong type";
      if (val.is_int() && !cs.domain.contains(val.as_int()))
        return "variable '" + v.name + "' is outside its domain";
    }
    auto lookup = [&](const std::string& name, SourceLoc) {
      return checked_lookup(assignment, name);
    };
    // Short-circuit conjunct scan; a failing conjunct evaluated on a taken
    // prefix makes the whole assignment unsatisfiable.
    auto guard_holds = [&](const std::vector<ExprPtr>& guard) {
      for (const auto& g : guard)
        if (!eval_expr(*g, lookup, cs.domain).as_bool()) return false;
      return true;
    };
    for (const auto& c : cs.constraints) {
      if (const auto* eq = std::get_if<EqC>(&c)) {
        Value expected;
        try {
          if (guard_holds(eq->guard))
            expected = eval_expr(*eq->rhs, lookup, cs.domain);
          else
            expected = inert_value(checked_lookup(assignment, eq->var).type(), cs.domain);
        } catch (const EvalAbort&) {
          return "equation for '" + eq->var + "' does not evaluate";
        }
        if (checked_lookup(assignment, eq->var) != expected)
          return "equation for '" + eq->var + "' violated";
      } else if (const auto* phi = std::get_if<PhiEqC>(&c)) {
        bool taken;
        try {
          taken = guard_holds(phi->guard);
        } catch (const EvalAbort&) {
          return "phi guard for '" + phi->var + "' does not evaluate";
        }
        Value selected = taken ? checked_lookup(assignment, phi->then_var)
                               : checked_lookup(assignment, phi->else_var);
        if (checked_lookup(assignment, phi->var) != selected)
          return "phi equation for '" + phi->var + "' violated";
      } else if (const auto* tie = std::get_if<InputTieC>(&c)) {
        if (checked_lookup(assignment, tie->var) != checked_lookup(assignment, tie->var_m))
          return "input tie " + tie->var + " = " + tie->var_m + " violated";
      } else if (const auto* diff = std::get_if<OutputDiffersC>(&c)) {
        bool any = false;
        for (const auto& [a, b] : diff->pairs)
          any |= checked_lookup(assignment, a) != checked_lookup(assignment, b);
        if (!any) return "no output pair differs";
      } else if (const auto* blocking = std::get_if<BlockingC>(&c)) {
        bool all_match = true;
        for (const auto& [name, val] : blocking->inputs)
          all_match &= checked_lookup(assignment, name) == val;
        if (all_match) return "blocked input tuple " + to_string(blocking->inputs);
      } else {
        const auto& flag = std::get<FlagValueC>(c);
        if (checked_lookup(assignment, flag.var).as_bool() != flag.value)
          return "flag '" + flag.var + "' pinned to the other value";
      }
    }
  } catch (const CheckAbort& abort) {
    return abort.message;
  }
  return std::nullopt;
}

std::string system_to_json(const ConstraintSystem& cs) {
  nlohmann::ordered_json j;
  j["domain"] = {{"int_min", cs.domain.int_min}, {"int_max", cs.domain.int_max}};
  auto vars = nlohmann::ordered_json::array();
  for (const auto& v : cs.variables) vars.push_back({{"name", v.name}, {"type", to_string(v.type)}});
  j["variables"] = std::move(vars);
  auto cons = nlohmann::ordered_json::array();
  for (const auto& c : cs.constraints) {
    nlohmann::ordered_json rec;
    if (const auto* eq = std::get_if<EqC>(&c)) {
      rec["kind"] = "eq";
      rec["var"] = eq->var;
      rec["rhs"] = pretty_print(eq->rhs);
      if (!eq->guard.empty()) rec["guard"] = pretty_print(guard_conjunction(eq->guard));
    } else if (const auto* phi = std::get_if<PhiEqC>(&c)) {
      rec["kind"] = "phi";
      rec["var"] = phi->var;
      rec["guard"] = pretty_print(guard_conjunction(phi->guard));
      rec["then"] = phi->then_var;
      rec["else"] = phi->else_var;
    } else if (const auto* tie = std::get_if<InputTieC>(&c)) {
      rec["kind"] = "input_tie";
      rec["var"] = tie->var;
      rec["var_m"] = tie->var_m;
    } else if (const auto* diff = std::get_if<OutputDiffersC>(&c)) {
      rec["kind"] = "output_differs";
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [a, b] : diff->pairs) pairs.push_back({a, b});
      rec["pairs"] = std::move(pairs);
    } else if (const auto* blocking = std::get_if<BlockingC>(&c)) {
      rec["kind"] = "blocking";
      nlohmann::ordered_json inputs;
      for (const auto& [name, val] : blocking->inputs)
        inputs[name] = val.is_int() ? nlohmann::ordered_json(val.as_int())
                                    : nlohmann::ordered_json(val.as_bool());
      rec["inputs"] = std::move(inputs);
    } else {
      const auto& flag = std::get<FlagValueC>(c);
      rec["kind"] = "flag_value";
      rec["var"] = flag.var;
      rec["value"] = flag.value;
    }
    cons.push_back(std::move(rec));
  }
  j["constraints"] = std::move(cons);
  return j.dump(2);
}

}  // namespace mutdiff

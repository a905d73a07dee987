#include "mutdiff/detector.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "mutdiff/solver.hpp"

namespace mutdiff {

std::string verdict_name(const Verdict& v) {
  if (v.equivalent()) return "equivalent";
  if (v.not_equivalent()) return "not_equivalent";
  const auto& u = std::get<UnknownVerdict>(v.v);
  return u.reason == UnknownVerdict::Reason::Timeout ? "unknown_timeout"
                                                     : "unknown_blocking_exhausted";
}

ConversionStages convert_stages(const Program& p, int nd, const DomainConfig& dom) {
  ConversionStages stages;
  stages.lfp = eliminate_loops(p, nd);
  stages.ssa = to_ssa(stages.lfp);
  stages.cs = encode(stages.ssa, dom);
  return stages;
}

ConstraintSystem convert(const Program& p, int nd, const DomainConfig& dom) {
  return convert_stages(p, nd, dom).cs;
}

namespace {

struct JointAtDepth {
  ConstraintSystem joint;
  // Witness extraction data: solution names of the original side's inputs.
  std::vector<std::string> input_names;
};

JointAtDepth build_joint(const ConversionStages& stages_p, const Program& mutant_program, int nd,
                         const DomainConfig& dom) {
  SsaProgram ssa_m = rename_for_mutant(to_ssa(eliminate_loops(mutant_program, nd)));
  ConstraintSystem cs_m = encode(ssa_m, dom);

  std::vector<std::pair<std::string, std::string>> ties;
  for (const auto& [base, name_p] : stages_p.ssa.input_versions)
    ties.emplace_back(name_p, ssa_m.input_versions.at(base));
  std::vector<std::pair<std::string, std::string>> output_pairs;
  for (const auto& base : stages_p.ssa.output_bases)
    output_pairs.emplace_back(stages_p.ssa.final_versions.at(base),
                              ssa_m.final_versions.at(base));

  JointAtDepth out{build_joint_system(stages_p.cs, cs_m, ties, output_pairs), {}};
  out.input_names = out.joint.input_vars;
  return out;
}

VariableEnvironment project_inputs(const ConstraintSystem& cs,
                                   const VariableEnvironment& assignment, bool by_base) {
  VariableEnvironment env;
  for (const auto& name : cs.input_vars) {
    const Value& v = assignment.at(name);
    env[by_base ? cs.input_bases.at(name) : name] = v;
  }
  return env;
}

Verdict detect_impl(const Program& p, const Mutant& m, const DetectorConfig& cfg,
                    const SystemHook& hook,
                    const std::map<int, ConversionStages>* stage_cache) {
  cfg.validate();
  if (!equal(m.base, p))
    throw PreconditionViolation("mutant was generated from a different base program");

  auto start = std::chrono::steady_clock::now();
  auto deadline = start + cfg.domain.solver_timeout;
  auto finish = [&](Verdict v, int nd) {
    v.nd_reached = nd;
    v.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return v;
  };

  std::map<int, ConversionStages> local_cache;
  auto stages_at = [&](int nd) -> const ConversionStages& {
    if (stage_cache) {
      auto it = stage_cache->find(nd);
      if (it != stage_cache->end()) return it->second;
    }
    auto it = local_cache.find(nd);
    if (it == local_cache.end())
      it = local_cache.emplace(nd, convert_stages(p, nd, cfg.domain)).first;
    return it->second;
  };

  int nd = cfg.nd_initial;
  while (true) {
    const ConversionStages& stages_p = stages_at(nd);
    JointAtDepth at_depth = build_joint(stages_p, m.program, nd, cfg.domain);
    if (hook) hook(nd, at_depth.joint);

    // Blocking clauses live only within one depth; a blocked input may be a
    // genuine witness once the unrolling grows. Solutions arrive in search
    // order, so each re-solve resumes past the tuple it just rejected.
    ConstraintSystem sys = at_depth.joint;
    std::optional<std::vector<std::int64_t>> resume;
    for (int round = 0; round < cfg.max_blocking_rounds; ++round) {
      SolveResult res = solve(sys, deadline, resume);
      if (res.status == SolveResult::Status::Timeout)
        return finish(Verdict{UnknownVerdict{UnknownVerdict::Reason::Timeout}}, nd);
      if (res.status == SolveResult::Status::Unsat) {
        if (nd >= cfg.nd_max) return finish(Verdict{EquivalentVerdict{nd}}, nd);
        ++nd;
        goto next_depth;
      }

      bool any_flag_true = false;
      for (const auto& flag : sys.flag_vars)
        any_flag_true |= res.assignment.at(flag).as_bool();
      if (any_flag_true) {
        sys.constraints.push_back(
            BlockingC{project_inputs(at_depth.joint, res.assignment, /*by_base=*/false)});
        resume = res.search_key;
        continue;
      }

      VariableEnvironment input = project_inputs(at_depth.joint, res.assignment, /*by_base=*/true);
      ExecResult run_p = interpret(p, input, cfg.domain, cfg.max_steps);
      ExecResult run_m = interpret(m.program, input, cfg.domain, cfg.max_steps);
      if (!run_p.normal() || !run_m.normal() || run_p.outputs == run_m.outputs) {
        std::ostringstream msg;
        msg << "solver input " << to_string(input) << " for mutant " << m.id
            << " is not distinguishing: original " << to_string(run_p.kind);
        if (run_p.normal()) msg << " " << to_string(run_p.outputs);
        msg << ", mutant " << to_string(run_m.kind);
        if (run_m.normal()) msg << " " << to_string(run_m.outputs);
        throw WitnessValidationFailure(msg.str());
      }
      NotEquivalentVerdict verdict;
      verdict.witness.input = input;
      verdict.witness.expected_output = run_p.outputs;
      verdict.output_p = run_p.outputs;
      verdict.output_m = run_m.outputs;
      return finish(Verdict{std::move(verdict)}, nd);
    }
    return finish(Verdict{UnknownVerdict{UnknownVerdict::Reason::BlockingRoundsExhausted}}, nd);
  next_depth:;
  }
}

}  // namespace

Verdict detect(const Program& p, const Mutant& m, const DetectorConfig& cfg,
               const SystemHook& hook) {
  return detect_impl(p, m, cfg, hook, nullptr);
}

std::vector<MutantVerdict> batch_detect(const Program& p, const std::vector<Mutant>& mutants,
                                        const DetectorConfig& cfg, int jobs,
                                        const BatchHook& hook) {
  cfg.validate();
  // The original's conversion is a pure function of (program, nd, domain):
  // share it across all mutants.
  std::map<int, ConversionStages> cache;
  for (int nd = cfg.nd_initial; nd <= cfg.nd_max; ++nd)
    cache.emplace(nd, convert_stages(p, nd, cfg.domain));

  std::vector<MutantVerdict> results(mutants.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= mutants.size()) return;
      const Mutant& m = mutants[i];
      MutantVerdict& out = results[i];
      out.mutant_id = m.id;
      SystemHook mutant_hook;
      if (hook)
        mutant_hook = [&hook, &m](int nd, const ConstraintSystem& joint) { hook(m, nd, joint); };
      try {
        out.verdict = detect_impl(p, m, cfg, mutant_hook, &cache);
      } catch (const WitnessValidationFailure& e) {
        out.error = e.what();
        out.witness_validation_failed = true;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };

  int workers = std::max(1, jobs);
  if (workers == 1 || mutants.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace mutdiff

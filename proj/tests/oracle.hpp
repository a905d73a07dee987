#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"
#include "mutdiff/interp.hpp"

// Test-only oracles, independent of the constraint pipeline: they classify
// mutants by exhaustive concrete execution and never touch the solver.
namespace mutdiff::testing {

std::string corpus_path(const std::string& name);
Program load_corpus_program(const std::string& name);
std::string load_corpus_source(const std::string& name);

/// The acceptance corpus (pathological4 is kept separate for timeout tests).
const std::vector<std::string>& corpus_names();

/// Enumerates every input environment over the domain (int inputs take every
/// value in [int_min, int_max], bool inputs both values).
void for_each_input(const Program& p, const DomainConfig& dom,
                    const std::function<void(const VariableEnvironment&)>& fn);

/// True when every loop activation in the run stayed within `bound` iterations.
bool iterations_within(const ExecResult& r, int bound);

struct BruteForceResult {
  /// A distinguishing input exists whose executions (both sides) complete
  /// normally with every loop activation within nd_max iterations.
  bool found_within_bound = false;
  std::optional<VariableEnvironment> witness_within_bound;
  /// A distinguishing input exists regardless of iteration count (both runs
  /// still have to complete normally to have comparable outputs).
  bool found_any = false;
  /// All distinguishing inputs within the bound (for solution-set checks).
  std::vector<VariableEnvironment> all_within_bound;
};

BruteForceResult brute_force_classify(const Program& p, const Program& mutant,
                                      const DomainConfig& dom, int nd_max,
                                      std::int64_t max_steps = 20'000);

}  // namespace mutdiff::testing

#pragma once

#include <cstdint>
#include <map>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"

namespace mutdiff {

constexpr std::int64_t kDefaultMaxSteps = 1'000'000;

struct ExecResult {
  enum class Kind { Normal, NonTermination, DomainOverflow, DivisionByZero };

  Kind kind = Kind::Normal;
  /// Final values of the declared outputs (Normal runs only).
  VariableEnvironment outputs;
  SourceLoc failure_loc;
  /// For each while statement (keyed by source line), the largest number of
  /// body iterations any single activation of that loop performed.
  std::map<int, std::int64_t> loop_max_iters;
  std::int64_t steps = 0;

  bool normal() const { return kind == Kind::Normal; }
};

std::string to_string(ExecResult::Kind k);

/// Concretely executes a program. Deterministic: identical (p, input,
/// domain, max_steps) always produce identical results. The input must bind
/// exactly the declared inputs with in-domain values (PreconditionViolation
/// otherwise). Exceeding max_steps statement executions yields
/// NonTermination; any intermediate value outside the domain yields
/// DomainOverflow.
ExecResult interpret(const Program& p, const VariableEnvironment& input,
                     const DomainConfig& dom = {}, std::int64_t max_steps = kDefaultMaxSteps);

enum class TestOutcome { Passing, Failing };

/// A test passes iff interpretation completes normally and agrees with the
/// expected output on every variable it binds; an empty expected output
/// passes whenever interpretation completes. All failure outcomes
/// (including non-termination) make the test Failing.
TestOutcome classify_test(const Program& p, const TestCase& tc, const DomainConfig& dom = {},
                          std::int64_t max_steps = kDefaultMaxSteps);

}  // namespace mutdiff

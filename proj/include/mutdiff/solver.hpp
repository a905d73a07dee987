#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "mutdiff/constraint.hpp"

namespace mutdiff {

struct SolveResult {
  enum class Status { Solution, Unsat, Timeout };
  Status status = Status::Unsat;
  VariableEnvironment assignment;  // complete, Solution only
  /// The solution's position in the deterministic search order (values of
  /// the searched variables, bools as 0/1). Feeding it back as resume_after
  /// to a later solve over the same system (plus any extra blocking
  /// clauses) skips the already-exhausted prefix of the search space.
  std::vector<std::int64_t> search_key;

  bool sat() const { return status == Status::Solution; }
};

std::string to_string(SolveResult::Status s);

/// Complete finite-domain solver: backtracking search over the free
/// variables with forward evaluation of the functional equations and
/// interval propagation for pruning. Returns Unsat only when no assignment
/// over the declared domains satisfies the system; every Solution is
/// re-checked by the independent constraint checker before being returned.
/// The deadline is polled at every search node. Solutions are produced in
/// lexicographic order of the searched variables.
SolveResult solve(const ConstraintSystem& cs, std::chrono::steady_clock::time_point deadline,
                  const std::optional<std::vector<std::int64_t>>& resume_after = std::nullopt);

/// Convenience overload: deadline = now + cs.domain.solver_timeout.
SolveResult solve(const ConstraintSystem& cs);

}  // namespace mutdiff

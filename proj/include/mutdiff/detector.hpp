#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mutdiff/constraint.hpp"
#include "mutdiff/interp.hpp"
#include "mutdiff/loop_elim.hpp"
#include "mutdiff/mutation.hpp"
#include "mutdiff/ssa.hpp"

namespace mutdiff {

struct DetectorConfig {
  int nd_initial = 2;
  int nd_max = 5;
  DomainConfig domain;
  int max_blocking_rounds = 1024;
  std::int64_t max_steps = kDefaultMaxSteps;  // witness validation budget

  void validate() const {
    if (nd_initial < 1 || nd_initial > nd_max)
      throw PreconditionViolation("detector requires 1 <= nd_initial <= nd_max");
    if (max_blocking_rounds < 1)
      throw PreconditionViolation("max_blocking_rounds must be positive");
    domain.validate();
  }
};

struct EquivalentVerdict {
  int nd_reached = 0;
};

struct NotEquivalentVerdict {
  /// Distinguishing test case: the solver's input with the original
  /// program's outputs as expected values. Always validated by concrete
  /// interpretation before the verdict is returned.
  TestCase witness;
  VariableEnvironment output_p;
  VariableEnvironment output_m;
};

struct UnknownVerdict {
  enum class Reason { Timeout, BlockingRoundsExhausted };
  Reason reason = Reason::Timeout;
};

struct Verdict {
  std::variant<EquivalentVerdict, NotEquivalentVerdict, UnknownVerdict> v;
  int nd_reached = 0;
  std::int64_t wall_ms = 0;

  bool equivalent() const { return std::holds_alternative<EquivalentVerdict>(v); }
  bool not_equivalent() const { return std::holds_alternative<NotEquivalentVerdict>(v); }
  bool unknown() const { return std::holds_alternative<UnknownVerdict>(v); }
};

std::string verdict_name(const Verdict& v);

struct ConversionStages {
  LoopFreeProgram lfp;
  SsaProgram ssa;
  ConstraintSystem cs;
};

/// eliminate_loops -> to_ssa -> encode, composed, with flag variables
/// annotated in the resulting system.
ConversionStages convert_stages(const Program& p, int nd, const DomainConfig& dom = {});
ConstraintSystem convert(const Program& p, int nd, const DomainConfig& dom = {});

/// Called once per joint system built (one per nesting depth attempted).
using SystemHook = std::function<void(int nd, const ConstraintSystem& joint)>;

/// Decides whether mutant m is (potentially) equivalent to p:
///  - builds the joint constraint system at the current nesting depth, with
///    mutant variables renamed _M, inputs tied and outputs required to
///    differ;
///  - solves; on Unsat raises the depth (discarding blocking clauses) until
///    nd_max, then returns Equivalent;
///  - on a solution whose loop flags (both sides) are all false, validates
///    the input by running both programs and returns NotEquivalent;
///  - on a flagged solution blocks that input tuple and re-solves.
/// The domain's solver_timeout is a wall budget for the whole call; Timeout
/// and blocking-round exhaustion map to Unknown.
///
/// Throws WitnessValidationFailure if the interpreter refutes a solver
/// witness; that always signals an encoding bug.
Verdict detect(const Program& p, const Mutant& m, const DetectorConfig& cfg,
               const SystemHook& hook = {});

struct MutantVerdict {
  std::string mutant_id;
  std::optional<Verdict> verdict;
  std::string error;                   // per-mutant failure, batch continues
  bool witness_validation_failed = false;
};

using BatchHook = std::function<void(const Mutant& m, int nd, const ConstraintSystem& joint)>;

/// detect() per mutant, order-preserving; `jobs` > 1 fans the mutants out
/// across worker threads. Per-mutant errors are recorded, never thrown.
std::vector<MutantVerdict> batch_detect(const Program& p, const std::vector<Mutant>& mutants,
                                        const DetectorConfig& cfg, int jobs = 1,
                                        const BatchHook& hook = {});

}  // namespace mutdiff

#pragma once

#include <chrono>
#include <cstdint>

#include "mutdiff/errors.hpp"

namespace mutdiff {

/// Global value domain shared by the interpreter and the finite-domain
/// solver. Every integer the program touches must stay inside
/// [int_min, int_max]; leaving it is an explicit DomainOverflow outcome on
/// the concrete side and infeasibility on the constraint side.
struct DomainConfig {
  std::int64_t int_min = -128;
  std::int64_t int_max = 127;
  std::chrono::milliseconds solver_timeout{300'000};

  // Bounds are capped at +/-2^30 so products of two in-domain values always
  // fit in int64 arithmetic.
  static constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 30;

  void validate() const {
    if (int_min >= int_max)
      throw PreconditionViolation("domain requires int_min < int_max");
    if (int_min < -kMaxMagnitude || int_max > kMaxMagnitude)
      throw PreconditionViolation("domain endpoints exceed +/-2^30");
    if (solver_timeout.count() <= 0)
      throw PreconditionViolation("solver timeout must be positive");
  }

  bool contains(std::int64_t v) const { return v >= int_min && v <= int_max; }

  std::int64_t width() const { return int_max - int_min + 1; }
};

}  // namespace mutdiff

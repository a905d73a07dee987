#pragma once

#include <random>

#include "mutdiff/ast.hpp"
#include "mutdiff/domain.hpp"

// Deterministic random-program generator for property tests. All generated
// programs parse-check clean: locals are declared at the top level before
// any branching, loops are counter-bounded, and the output is assigned last.
namespace mutdiff::testing {

struct GenConfig {
  int num_inputs = 2;
  int max_locals = 2;
  int max_stmts = 4;
  int max_expr_depth = 2;
  bool allow_loops = true;
};

Program random_program(std::mt19937& rng, const GenConfig& cfg = {});

VariableEnvironment random_input(const Program& p, std::mt19937& rng, const DomainConfig& dom);

}  // namespace mutdiff::testing

#include <doctest.h>

#include "mutdiff/errors.hpp"
#include "mutdiff/interp.hpp"
#include "mutdiff/parser.hpp"
#include "oracle.hpp"

using namespace mutdiff;
namespace mt = mutdiff::testing;

namespace {

VariableEnvironment ints(std::initializer_list<std::pair<std::string, std::int64_t>> vals) {
  VariableEnvironment env;
  for (const auto& [name, v] : vals) env[name] = Value(v);
  return env;
}

}  // namespace

TEST_CASE("mult computes products") {
  Program p = mt::load_corpus_program("mult");
  ExecResult r = interpret(p, ints({{"a", 2}, {"b", 3}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{6}));
  CHECK(r.loop_max_iters.at(4) == 2);

  r = interpret(p, ints({{"a", 0}, {"b", 7}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{0}));
  CHECK(r.loop_max_iters.at(4) == 0);

  r = interpret(p, ints({{"a", 1}, {"b", 1}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{1}));
}

TEST_CASE("interpretation is deterministic") {
  Program p = mt::load_corpus_program("gcd");
  ExecResult a = interpret(p, ints({{"a", 12}, {"b", 8}}));
  ExecResult b = interpret(p, ints({{"a", 12}, {"b", 8}}));
  REQUIRE(a.normal());
  CHECK(a.outputs == b.outputs);
  CHECK(a.steps == b.steps);
  CHECK(a.outputs.at("res") == Value(std::int64_t{4}));
}

TEST_CASE("input preconditions are enforced") {
  Program p = mt::load_corpus_program("mult");
  CHECK_THROWS_AS(interpret(p, ints({{"a", 1}})), PreconditionViolation);
  CHECK_THROWS_AS(interpret(p, ints({{"a", 1}, {"b", 1}, {"c", 1}})), PreconditionViolation);
  CHECK_THROWS_AS(interpret(p, ints({{"a", 1}, {"b", 999}})), PreconditionViolation);
}

TEST_CASE("domain overflow is an explicit outcome, never wraparound") {
  Program p = parse("program big { input int a; output int res;\nres = a * a;\n}");
  DomainConfig dom;  // [-128, 127]
  ExecResult r = interpret(p, ints({{"a", 12}}), dom);
  REQUIRE(r.kind == ExecResult::Kind::DomainOverflow);
  CHECK(r.outputs.empty());
  r = interpret(p, ints({{"a", 11}}), dom);
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{121}));
}

TEST_CASE("division semantics: truncation toward zero, explicit zero failure") {
  Program p = parse("program d { input int a; input int b; output int res;\nres = a / b;\n}");
  ExecResult r = interpret(p, ints({{"a", -7}, {"b", 2}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{-3}));
  r = interpret(p, ints({{"a", 7}, {"b", 0}}));
  CHECK(r.kind == ExecResult::Kind::DivisionByZero);
  Program m = parse("program m { input int a; input int b; output int res;\nres = a % b;\n}");
  r = interpret(m, ints({{"a", -7}, {"b", 2}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{-1}));
}

TEST_CASE("non-termination is reported after max_steps") {
  Program p = parse(
      "program spin { input int a; output int res;\nres = 0;\nwhile (a == a) {\nres = res;\n}\n}");
  ExecResult r = interpret(p, ints({{"a", 1}}), {}, 500);
  CHECK(r.kind == ExecResult::Kind::NonTermination);
}

TEST_CASE("boolean operators are strict") {
  // false and (1/0 == 1) still evaluates the division.
  Program p = parse(
      "program s { input int a; output int res;\nres = 0;\nif (a > 99 and 1 / a > 0) {\nres = 1;\n}\n}");
  ExecResult r = interpret(p, ints({{"a", 0}}));
  CHECK(r.kind == ExecResult::Kind::DivisionByZero);
}

TEST_CASE("classify_test per the passing/failing contract") {
  Program p = mt::load_corpus_program("mult");
  TestCase passing{ints({{"a", 1}, {"b", 2}}), ints({{"res", 2}})};
  CHECK(classify_test(p, passing) == TestOutcome::Passing);
  TestCase failing{ints({{"a", 1}, {"b", 2}}), ints({{"res", 3}})};
  CHECK(classify_test(p, failing) == TestOutcome::Failing);
  TestCase empty_expected{ints({{"a", 3}, {"b", 0}}), {}};
  CHECK(classify_test(p, empty_expected) == TestOutcome::Passing);
}

TEST_CASE("classify_test counts failed runs as failing") {
  Program p = parse(
      "program spin { input int a; output int res;\nres = 0;\nwhile (a == a) {\nres = res;\n}\n}");
  TestCase tc{ints({{"a", 1}}), {}};
  CHECK(classify_test(p, tc, {}, 500) == TestOutcome::Failing);
  CHECK_THROWS_AS(
      classify_test(mt::load_corpus_program("mult"),
                    TestCase{ints({{"a", 1}, {"b", 2}}), ints({{"bogus", 1}})}),
      PreconditionViolation);
}

TEST_CASE("nested loop iteration stats are per activation") {
  Program p = mt::load_corpus_program("mult_nested");
  ExecResult r = interpret(p, ints({{"a", 3}, {"b", 2}}));
  REQUIRE(r.normal());
  CHECK(r.outputs.at("res") == Value(std::int64_t{6}));
  // Outer loop at line 4 runs 3 times; the inner loop's worst activation is 2.
  CHECK(r.loop_max_iters.at(4) == 3);
  CHECK(r.loop_max_iters.at(6) == 2);
}

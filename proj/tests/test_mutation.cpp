#include <doctest.h>

#include <algorithm>

#include "mutdiff/errors.hpp"
#include "mutdiff/mutation.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/pretty.hpp"
#include "oracle.hpp"

using namespace mutdiff;
namespace mt = mutdiff::testing;

namespace {

std::vector<const Mutant*> mutants_with_original(const std::vector<Mutant>& ms,
                                                 const std::string& original) {
  std::vector<const Mutant*> out;
  for (const auto& m : ms)
    if (m.original_fragment == original) out.push_back(&m);
  return out;
}

bool has_mutation(const std::vector<Mutant>& ms, const std::string& original,
                  const std::string& mutated) {
  for (const auto& m : ms)
    if (m.original_fragment == original && m.mutated_fragment == mutated) return true;
  return false;
}

}  // namespace

TEST_CASE("AOR on i + 1 includes minus and times variants") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, {MutationOperatorClass::AOR});
  CHECK(has_mutation(ms, "i + 1", "i - 1"));
  CHECK(has_mutation(ms, "i + 1", "i * 1"));
  CHECK(has_mutation(ms, "res + b", "res / b"));
  for (const auto& m : ms) CHECK(m.operator_class == MutationOperatorClass::AOR);
}

TEST_CASE("ROR on one relational node yields exactly five mutants") {
  Program p = parse("program r { input int i; input int a; output bool res;\nres = i < a;\n}");
  auto ms = generate_mutants(p, {MutationOperatorClass::ROR});
  CHECK(ms.size() == 5);
  std::set<std::string> seen;
  for (const auto& m : ms) seen.insert(m.mutated_fragment);
  CHECK(seen == std::set<std::string>{"i <= a", "i > a", "i >= a", "i == a", "i != a"});
}

TEST_CASE("a program with no operators or constants has nothing to mutate") {
  Program p = parse("program id { input int a; output int res;\nres = a;\n}");
  CHECK(generate_mutants(p, default_operator_classes()).empty());
}

TEST_CASE("the classic i = i + 2 mutant arises from CRP") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, {MutationOperatorClass::CRP});
  CHECK(has_mutation(ms, "1", "2"));
  // c -> c+1, c-1, -c (dedup: 0 and 1 already cover the rest for c = 1)
  auto ones = mutants_with_original(ms, "1");
  std::set<std::string> vals;
  for (const auto* m : ones) vals.insert(m->mutated_fragment);
  CHECK(vals == std::set<std::string>{"2", "0", "-1"});
}

TEST_CASE("apply_mutation reproduces the i = i + 2 example") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, {MutationOperatorClass::CRP});
  const Mutant* target = nullptr;
  for (const auto& m : ms)
    if (m.original_fragment == "1" && m.mutated_fragment == "2") target = &m;
  REQUIRE(target != nullptr);
  Program direct = apply_mutation(p, target->location, ReplaceIntConstant{2});
  CHECK(equal(direct, target->program));
  CHECK(pretty_print(direct).find("i = i + 2;") != std::string::npos);
}

TEST_CASE("identity replacement is not a mutation") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, {MutationOperatorClass::AOR});
  REQUIRE(!ms.empty());
  CHECK_THROWS_AS(apply_mutation(p, ms[0].location, ReplaceBinaryOp{BinOp::Add}), NotAMutation);
  CHECK_THROWS_AS(apply_mutation(p, ms[0].location, ReplaceIntConstant{5}), InvalidLocation);
}

TEST_CASE("cross-category replacement is ill-typed") {
  Program p = mt::load_corpus_program("mult");
  // The while condition i < a sits at body[2]/cond.
  AstPath cond_path{{PathStep::Tag::Body, 2}, {PathStep::Tag::Cond, 0}};
  CHECK_THROWS_AS(apply_mutation(p, cond_path, ReplaceBinaryOp{BinOp::And}), IllTypedMutation);
  CHECK_THROWS_AS(apply_mutation(p, cond_path, ReplaceBinaryOp{BinOp::Add}), IllTypedMutation);
}

TEST_CASE("invalid locations are rejected") {
  Program p = mt::load_corpus_program("mult");
  AstPath bogus{{PathStep::Tag::Body, 99}};
  CHECK_THROWS_AS(apply_mutation(p, bogus, ReplaceIntConstant{0}), InvalidLocation);
}

TEST_CASE("every mutant differs from the base in exactly one node") {
  Program p = mt::load_corpus_program("gcd");
  auto ms = generate_mutants(p, default_operator_classes());
  CHECK(!ms.empty());
  for (const auto& m : ms) {
    CHECK(!equal(m.program, p));
    // Putting the original fragment back restores the base program exactly.
    ExprPtr original = expr_at(p, m.location);
    Program restored = replace_expr(m.program, m.location, original);
    CHECK(equal(restored, p));
  }
}

TEST_CASE("mutants re-parse from their pretty-printed form") {
  Program p = mt::load_corpus_program("even_odd");
  auto ms = generate_mutants(p, default_operator_classes());
  CHECK(!ms.empty());
  for (const auto& m : ms) {
    Program reparsed = parse(pretty_print(m.program));
    CHECK(equal(reparsed, m.program));
  }
}

TEST_CASE("generation is deterministic and ids are stable") {
  Program p = mt::load_corpus_program("mult");
  auto a = generate_mutants(p, default_operator_classes());
  auto b = generate_mutants(p, default_operator_classes());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(equal(a[i].program, b[i].program));
  }
  std::set<std::string> printed;
  for (const auto& m : a) CHECK(printed.insert(pretty_print(m.program)).second);
}

TEST_CASE("UOI inserts on composite expressions, UOD deletes unaries") {
  Program p = parse(
      "program u { input int a; input bool c; output int res;\n"
      "res = 0;\nif (not c) {\nres = a + 1;\n}\n}");
  auto uoi = generate_mutants(p, {MutationOperatorClass::UOI});
  CHECK(has_mutation(uoi, "a + 1", "-(a + 1)"));
  CHECK(has_mutation(uoi, "not c", "not (not c)"));
  auto uod = generate_mutants(p, {MutationOperatorClass::UOD});
  REQUIRE(uod.size() == 1);
  CHECK(uod[0].original_fragment == "not c");
  CHECK(uod[0].mutated_fragment == "c");
}

TEST_CASE("VRP is off by default and type-safe when enabled") {
  Program p = parse(
      "program v { input int a; input int b; input bool c; output int res;\n"
      "res = a;\nif (c) {\nres = b;\n}\n}");
  auto defaults = generate_mutants(p, default_operator_classes());
  for (const auto& m : defaults) CHECK(m.operator_class != MutationOperatorClass::VRP);
  auto vrp = generate_mutants(p, {MutationOperatorClass::VRP});
  CHECK(has_mutation(vrp, "a", "b"));
  CHECK(has_mutation(vrp, "c", "c") == false);
  for (const auto& m : vrp) CHECK_NOTHROW(check_program(m.program));
}

TEST_CASE("boolean constants flip under CRP") {
  Program p = mt::load_corpus_program("coffee_machine");
  auto ms = generate_mutants(p, {MutationOperatorClass::CRP});
  CHECK(has_mutation(ms, "false", "true"));
  CHECK(has_mutation(ms, "true", "false"));
}

TEST_CASE("mutant listing serializes to JSON records") {
  Program p = parse("program r { input int i; input int a; output bool res;\nres = i < a;\n}");
  auto ms = generate_mutants(p, {MutationOperatorClass::ROR});
  std::string json = mutants_to_json(ms);
  CHECK(json.find("\"operator_class\": \"ROR\"") != std::string::npos);
  CHECK(json.find("\"original\": \"i < a\"") != std::string::npos);
  CHECK(json.find("\"location\"") != std::string::npos);
}

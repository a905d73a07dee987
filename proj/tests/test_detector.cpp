#include <doctest.h>

#include <chrono>
#include <random>

#include "mutdiff/detector.hpp"
#include "mutdiff/errors.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/pretty.hpp"
#include "oracle.hpp"
#include "program_gen.hpp"

using namespace mutdiff;
namespace mt = mutdiff::testing;

namespace {

DetectorConfig small_domain_config() {
  DetectorConfig cfg;
  cfg.domain.int_min = 0;
  cfg.domain.int_max = 15;
  return cfg;
}

const Mutant* find_mutant(const std::vector<Mutant>& ms, const std::string& original,
                          const std::string& mutated) {
  for (const auto& m : ms)
    if (m.original_fragment == original && m.mutated_fragment == mutated) return &m;
  return nullptr;
}

VariableEnvironment ints(std::initializer_list<std::pair<std::string, std::int64_t>> vals) {
  VariableEnvironment env;
  for (const auto& [name, v] : vals) env[name] = Value(v);
  return env;
}

}  // namespace

TEST_CASE("convert composes the three stages") {
  Program p = mt::load_corpus_program("mult");
  ConstraintSystem cs = convert(p, 1);
  CHECK(cs.constraints.size() == 9);
  CHECK(cs.flag_vars == std::vector<std::string>{"loop_4_3"});

  // A loop-free program converts identically at every depth.
  Program straight = mt::load_corpus_program("rect_area");
  std::string dump = system_to_json(convert(straight, 1));
  for (int nd : {2, 3, 5}) CHECK(system_to_json(convert(straight, nd)) == dump);

  // Depth 2 with pinned inputs reproduces concrete evaluation.
  ConversionStages stages = convert_stages(p, 2, {});
  SsaEvalResult ev = eval_ssa(stages.ssa, ints({{"a_0", 2}, {"b_0", 3}}));
  REQUIRE(ev.normal());
  CHECK(ev.values.at(stages.ssa.final_versions.at("res")) == Value(std::int64_t{6}));
  CHECK(ev.values.at(stages.ssa.final_versions.at("loop_4")) == Value(false));
}

TEST_CASE("the i = i + 2 mutant gets a validated distinguishing test case") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, default_operator_classes());
  const Mutant* m = find_mutant(ms, "1", "2");
  REQUIRE(m != nullptr);
  REQUIRE(pretty_print(m->program).find("i = i + 2;") != std::string::npos);

  DetectorConfig cfg = small_domain_config();
  Verdict v = detect(p, *m, cfg);
  REQUIRE(v.not_equivalent());
  const auto& ne = std::get<NotEquivalentVerdict>(v.v);
  // Any valid witness is accepted; it must be confirmed by the interpreter
  // and must appear in the oracle's distinguishing set.
  ExecResult rp = interpret(p, ne.witness.input, cfg.domain);
  ExecResult rm = interpret(m->program, ne.witness.input, cfg.domain);
  REQUIRE(rp.normal());
  REQUIRE(rm.normal());
  CHECK(rp.outputs != rm.outputs);
  CHECK(rp.outputs == ne.output_p);
  CHECK(rm.outputs == ne.output_m);
  CHECK(ne.witness.expected_output == rp.outputs);

  mt::BruteForceResult oracle = mt::brute_force_classify(p, m->program, cfg.domain, cfg.nd_max);
  bool in_set = false;
  for (const auto& w : oracle.all_within_bound) in_set |= w == ne.witness.input;
  CHECK(in_set);
  // {a:2, b:1} is one such witness: the original yields 2, the mutant 1.
  ExecResult demo_p = interpret(p, ints({{"a", 2}, {"b", 1}}), cfg.domain);
  ExecResult demo_m = interpret(m->program, ints({{"a", 2}, {"b", 1}}), cfg.domain);
  CHECK(demo_p.outputs.at("res") == Value(std::int64_t{2}));
  CHECK(demo_m.outputs.at("res") == Value(std::int64_t{1}));
}

TEST_CASE("swapped relational operands are equivalent") {
  Program p = mt::load_corpus_program("mult");
  // i < a versus a > i: the identical relation, built by hand since the
  // operator tables never swap operands.
  AstPath cond{{PathStep::Tag::Body, 2}, {PathStep::Tag::Cond, 0}};
  const auto& original = std::get<While>(p.body[2]->node);
  const auto& cmp = std::get<Binary>(original.cond->node);
  ExprPtr swapped = make_binary(BinOp::Gt, cmp.rhs, cmp.lhs, original.cond->loc);
  Mutant m;
  m.id = "hand_swap";
  m.base = p;
  m.location = cond;
  m.operator_class = MutationOperatorClass::ROR;
  m.original_fragment = pretty_print(original.cond);
  m.program = replace_expr(p, cond, swapped);
  m.mutated_fragment = pretty_print(expr_at(m.program, cond));
  check_program(m.program);

  DetectorConfig cfg = small_domain_config();
  Verdict v = detect(p, m, cfg);
  REQUIRE(v.equivalent());
  CHECK(std::get<EquivalentVerdict>(v.v).nd_reached == cfg.nd_max);
}

TEST_CASE("a constant offset differs on every input") {
  Program p = parse("program off { input int a; output int res;\nres = a + 0;\n}");
  auto ms = generate_mutants(p, {MutationOperatorClass::CRP});
  const Mutant* m = find_mutant(ms, "0", "1");
  REQUIRE(m != nullptr);
  Verdict v = detect(p, *m, small_domain_config());
  REQUIRE(v.not_equivalent());
  const auto& ne = std::get<NotEquivalentVerdict>(v.v);
  CHECK(ne.output_p.at("res").as_int() + 1 == ne.output_m.at("res").as_int());
}

TEST_CASE("a too-small fixed depth yields the documented bounded true") {
  Program p = mt::load_corpus_program("mult");
  auto ms = generate_mutants(p, default_operator_classes());
  const Mutant* m = find_mutant(ms, "1", "2");
  REQUIRE(m != nullptr);
  DetectorConfig cfg = small_domain_config();
  cfg.nd_initial = 1;
  cfg.nd_max = 1;
  Verdict v = detect(p, *m, cfg);
  // At depth 1 no faithful distinguishing input exists, so the algorithm
  // reports equivalence even though deeper runs differ.
  REQUIRE(v.equivalent());
  CHECK(std::get<EquivalentVerdict>(v.v).nd_reached == 1);
  mt::BruteForceResult oracle = mt::brute_force_classify(p, m->program, cfg.domain, 1);
  CHECK(!oracle.found_within_bound);
  CHECK(mt::brute_force_classify(p, m->program, cfg.domain, 5).found_within_bound);
}

TEST_CASE("detect validates the mutant against its base") {
  Program p = mt::load_corpus_program("mult");
  Program other = mt::load_corpus_program("gcd");
  auto ms = generate_mutants(other, default_operator_classes());
  REQUIRE(!ms.empty());
  CHECK_THROWS_AS(detect(p, ms.front(), small_domain_config()), PreconditionViolation);
}

TEST_CASE("no outputs means no joint system") {
  Program p;
  p.name = "silent";
  p.inputs.push_back({"a", Ty::Int});
  p.body.push_back(make_decl("x", Ty::Int, make_var("a"), {2, 1}));
  check_program(p);
  Mutant m;
  m.id = "m1";
  m.base = p;
  m.location = {{PathStep::Tag::Body, 0}, {PathStep::Tag::Init, 0}};
  m.program = p;
  m.program.body[0] = make_decl("x", Ty::Int, make_unary(UnOp::Neg, make_var("a")), {2, 1});
  CHECK_THROWS_AS(detect(p, m, small_domain_config()), NoOutputs);
}

TEST_CASE("batch detection preserves order and isolates mutants") {
  Program p = mt::load_corpus_program("min2");
  auto ms = generate_mutants(p, default_operator_classes());
  REQUIRE(ms.size() >= 3);
  DetectorConfig cfg = small_domain_config();
  auto results = batch_detect(p, ms, cfg);
  REQUIRE(results.size() == ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(results[i].mutant_id == ms[i].id);
    REQUIRE(results[i].verdict.has_value());
    CHECK(results[i].error.empty());
  }
  // Identical results with two workers.
  auto parallel = batch_detect(p, ms, cfg, 2);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    REQUIRE(parallel[i].verdict.has_value());
    CHECK(verdict_name(*parallel[i].verdict) == verdict_name(*results[i].verdict));
  }
  CHECK(batch_detect(p, {}, cfg).empty());
}

TEST_CASE("a timeout in one mutant leaves the rest of the batch intact") {
  Program p = mt::load_corpus_program("pathological4");
  auto ms = generate_mutants(p, {MutationOperatorClass::AOR});
  const Mutant* dead = find_mutant(ms, "res + 1", "res - 1");
  const Mutant* live = find_mutant(ms, "w * x", "w + x");
  REQUIRE(dead != nullptr);
  REQUIRE(live != nullptr);
  DetectorConfig cfg;  // default domain [-128,127]
  cfg.domain.solver_timeout = std::chrono::milliseconds(400);
  auto results = batch_detect(p, {*dead, *live}, cfg);
  REQUIRE(results.size() == 2);
  REQUIRE(results[0].verdict.has_value());
  CHECK(results[0].verdict->unknown());
  CHECK(std::get<UnknownVerdict>(results[0].verdict->v).reason ==
        UnknownVerdict::Reason::Timeout);
  REQUIRE(results[1].verdict.has_value());  // processed despite the first timeout
}

TEST_CASE("detection works end to end on a branching program") {
  Program p = mt::load_corpus_program("max2");
  auto ms = generate_mutants(p, default_operator_classes());
  DetectorConfig cfg = small_domain_config();
  auto results = batch_detect(p, ms, cfg);
  int equivalent = 0, not_equivalent = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    REQUIRE(results[i].verdict.has_value());
    const Verdict& v = *results[i].verdict;
    if (v.equivalent()) ++equivalent;
    if (v.not_equivalent()) ++not_equivalent;
    // Soundness of false: every witness distinguishes concretely.
    if (v.not_equivalent()) {
      const auto& ne = std::get<NotEquivalentVerdict>(v.v);
      ExecResult rp = interpret(p, ne.witness.input, cfg.domain);
      ExecResult rm = interpret(ms[i].program, ne.witness.input, cfg.domain);
      REQUIRE(rp.normal());
      REQUIRE(rm.normal());
      CHECK(rp.outputs != rm.outputs);
    }
  }
  // max2's a >= b mutant of a > b is the classic equivalent mutant.
  const Mutant* ge = find_mutant(ms, "a > b", "a >= b");
  REQUIRE(ge != nullptr);
  Verdict v = detect(p, *ge, cfg);
  CHECK(v.equivalent());
  CHECK(not_equivalent > 0);
  CHECK(equivalent > 0);
}

TEST_CASE("detection always halts on fuzzed programs within its bounds") {
  std::mt19937 rng(987654);
  DetectorConfig cfg;
  cfg.domain.int_min = 0;
  cfg.domain.int_max = 7;
  cfg.domain.solver_timeout = std::chrono::seconds(2);
  cfg.max_blocking_rounds = 64;
  int detects = 0;
  for (int i = 0; i < 40 && detects < 80; ++i) {
    Program p = mutdiff::testing::random_program(rng);
    auto mutants = generate_mutants(p, default_operator_classes());
    std::size_t step = std::max<std::size_t>(1, mutants.size() / 2);
    for (std::size_t j = 0; j < mutants.size(); j += step) {
      Verdict v = detect(p, mutants[j], cfg);
      ++detects;
      // Soundness of false, on every fuzzed verdict.
      if (v.not_equivalent()) {
        const auto& ne = std::get<NotEquivalentVerdict>(v.v);
        ExecResult rp = interpret(p, ne.witness.input, cfg.domain);
        ExecResult rm = interpret(mutants[j].program, ne.witness.input, cfg.domain);
        REQUIRE(rp.normal());
        REQUIRE(rm.normal());
        CHECK(rp.outputs != rm.outputs);
      }
    }
  }
  CHECK(detects > 20);
}

TEST_CASE("bool inputs are searched like any other finite domain") {
  Program p = parse(
      "program gate { input bool enable; input int x; output int res;\n"
      "res = 0;\nif (enable) {\nres = x;\n}\n}");
  auto ms = generate_mutants(p, default_operator_classes());
  const Mutant* m = find_mutant(ms, "0", "1");
  REQUIRE(m != nullptr);
  DetectorConfig cfg = small_domain_config();
  Verdict v = detect(p, *m, cfg);
  REQUIRE(v.not_equivalent());
  const auto& ne = std::get<NotEquivalentVerdict>(v.v);
  REQUIRE(ne.witness.input.count("enable") == 1);
  CHECK(ne.witness.input.at("enable").is_bool());
  ExecResult rp = interpret(p, ne.witness.input, cfg.domain);
  ExecResult rm = interpret(m->program, ne.witness.input, cfg.domain);
  REQUIRE(rp.normal());
  REQUIRE(rm.normal());
  CHECK(rp.outputs != rm.outputs);
}

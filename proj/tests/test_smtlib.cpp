#include <doctest.h>

#include "mutdiff/detector.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/smtlib.hpp"
#include "oracle.hpp"

using namespace mutdiff;
namespace mt = mutdiff::testing;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("the mult system exports nine equation assertions plus bounds") {
  ConstraintSystem cs = convert(mt::load_corpus_program("mult"), 1);
  std::string smt = export_smtlib(cs);
  // One equality assertion per constraint.
  CHECK(count_occurrences(smt, "(assert (= ") == 9);
  // One bounds assertion per integer variable: a_0 b_0 i_1..3 res_1..3.
  CHECK(count_occurrences(smt, "(assert (and (<= (- 128)") == 8);
  CHECK(count_occurrences(smt, "(declare-const ") == 11);
  CHECK(smt.find("(set-logic ALL)") != std::string::npos);
  CHECK(smt.rfind("(check-sat)\n") == smt.size() - 12);
  CHECK(smt.find("(ite") != std::string::npos);  // guarded equations and phis
}

TEST_CASE("export is deterministic") {
  ConstraintSystem cs = convert(mt::load_corpus_program("gcd"), 2);
  CHECK(export_smtlib(cs) == export_smtlib(cs));
}

TEST_CASE("an unsatisfiable toy system exports its assertions") {
  ConstraintSystem cs;
  cs.domain.int_min = 0;
  cs.domain.int_max = 3;
  cs.variables = {{"x", Ty::Int}, {"c", Ty::Bool}};
  cs.constraints.push_back(EqC{"c", make_binary(BinOp::Gt, make_var("x"), make_int(5)), {}});
  cs.constraints.push_back(FlagValueC{"c", true});
  std::string smt = export_smtlib(cs);
  CHECK(smt.find("(assert (= c (> x 5)))") != std::string::npos);
  CHECK(smt.find("(assert (= c true))") != std::string::npos);
  CHECK(smt.find("(declare-const x Int)") != std::string::npos);
}

TEST_CASE("an empty system is a valid preamble with zero assertions") {
  ConstraintSystem cs;
  std::string smt = export_smtlib(cs);
  CHECK(count_occurrences(smt, "(assert") == 0);
  CHECK(smt.find("(set-logic ALL)") != std::string::npos);
  CHECK(smt.find("(check-sat)") != std::string::npos);
}

TEST_CASE("division exports truncating helpers and guarded side conditions") {
  Program p = parse("program d { input int a; input int b; output int res;\nres = 0;\nif (b > 0) {\nres = a / b;\n}\n}");
  ConstraintSystem cs = convert(p, 1);
  std::string smt = export_smtlib(cs);
  CHECK(smt.find("(define-fun tdiv") != std::string::npos);
  CHECK(smt.find("(define-fun tmod") != std::string::npos);
  CHECK(smt.find("(tdiv a_0 b_0)") != std::string::npos);
  // The divisor guard holds only on the taken path.
  CHECK(smt.find("(assert (=> (> b_0 0) (distinct b_0 0)))") != std::string::npos);
}

TEST_CASE("blocking and output-differs render as negated and disjoined asserts") {
  Program p = mt::load_corpus_program("mult");
  ConversionStages stages = convert_stages(p, 1, {});
  SsaProgram m = rename_for_mutant(stages.ssa);
  ConstraintSystem cs_m = encode(m, stages.cs.domain);
  std::vector<std::pair<std::string, std::string>> ties, pairs;
  for (const auto& [base, v0] : stages.ssa.input_versions)
    ties.emplace_back(v0, m.input_versions.at(base));
  for (const auto& base : stages.ssa.output_bases)
    pairs.emplace_back(stages.ssa.final_versions.at(base), m.final_versions.at(base));
  ConstraintSystem joint = build_joint_system(stages.cs, cs_m, ties, pairs);
  VariableEnvironment blocked;
  blocked["a_0"] = Value(std::int64_t{1});
  blocked["b_0"] = Value(std::int64_t{0});
  joint.constraints.push_back(BlockingC{blocked});
  std::string smt = export_smtlib(joint);
  CHECK(smt.find("(assert (= a_0 a_0_M))") != std::string::npos);
  CHECK(smt.find("(assert (or (distinct res_3 res_3_M)))") != std::string::npos);
  CHECK(smt.find("(assert (not (and (= a_0 1) (= b_0 0))))") != std::string::npos);
}

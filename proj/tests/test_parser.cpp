#include <doctest.h>

#include "mutdiff/errors.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/pretty.hpp"
#include "oracle.hpp"

using namespace mutdiff;
namespace mt = mutdiff::testing;

TEST_CASE("mult parses to the expected shape") {
  Program p = mt::load_corpus_program("mult");
  CHECK(p.name == "mult");
  REQUIRE(p.inputs.size() == 2);
  CHECK(p.inputs[0].name == "a");
  CHECK(p.inputs[1].name == "b");
  REQUIRE(p.outputs.size() == 1);
  CHECK(p.outputs[0].name == "res");
  REQUIRE(p.body.size() == 3);
  int decls = 0, whiles = 0;
  for (const auto& s : p.body) {
    decls += std::holds_alternative<Decl>(s->node);
    whiles += std::holds_alternative<While>(s->node);
  }
  CHECK(decls == 2);
  CHECK(whiles == 1);
  // The while sits on source line 4; loop elimination keys its flag on that.
  CHECK(std::get<While>(p.body[2]->node).cond != nullptr);
  CHECK(p.body[2]->loc.line == 4);
}

TEST_CASE("minimal program is a single assignment") {
  Program p = parse("program tiny { input int a; output int res;\nres = 1;\n}");
  REQUIRE(p.body.size() == 1);
  CHECK(std::holds_alternative<Assign>(p.body[0]->node));
}

TEST_CASE("procedure calls are rejected as unsupported") {
  CHECK_THROWS_AS(parse("program f { input int a; output int res;\nres = foo(a);\n}"),
                  UnsupportedConstruct);
  CHECK_THROWS_AS(parse("program f { input int a; output int res;\nfoo(a);\nres = 0;\n}"),
                  UnsupportedConstruct);
  CHECK_THROWS_AS(parse("program f { input int a; output int res;\nres = a[0];\n}"),
                  UnsupportedConstruct);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse("program p { input int a; output int res;\nres = ;\n}");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 0);
  }
}

TEST_CASE("type errors") {
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nres = a < 1;\n}"), TypeError);
  CHECK_THROWS_AS(parse("program p { input bool b; output int res;\nres = b + 1;\n}"), TypeError);
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nif (a) { res = 1; } else { res = 0; }\n}"),
                  TypeError);
  CHECK_THROWS_AS(parse("program p { input int a; output bool r;\nr = not a;\n}"), TypeError);
  // == and != compare integers only in this language.
  CHECK_THROWS_AS(parse("program p { input bool x; input bool y; output int res;\nif (x == y) { res = 1; } else { res = 0; }\n}"),
                  TypeError);
}

TEST_CASE("undeclared and use-before-assignment") {
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nres = q;\n}"),
                  UndeclaredVariable);
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nint x = res;\nres = x;\n}"),
                  UseBeforeDef);
  // Declared in one branch only: not definitely assigned afterwards.
  CHECK_THROWS_AS(
      parse("program p { input int a; output int res;\nif (a > 0) { int u = 1; }\nres = u;\n}"),
      UseBeforeDef);
}

TEST_CASE("conditional assignment does not definitely assign") {
  const char* src =
      "program p { input int a; output int res;\n"
      "if (a > 0) {\n    res = 1;\n}\n"
      "}";
  CHECK_THROWS_AS(parse(src), UseBeforeDef);  // output not assigned on every path
}

TEST_CASE("while bodies may run zero times for definite assignment") {
  const char* src =
      "program p { input int a; output int res;\n"
      "while (a > 0) {\n    res = 1;\n    a = a - 1;\n}\n"
      "}";
  CHECK_THROWS_AS(parse(src), UseBeforeDef);
}

TEST_CASE("reserved and duplicate names") {
  CHECK_THROWS_AS(parse("program p { input int loop_4; output int res;\nres = loop_4;\n}"),
                  SyntaxError);
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nint loop_12 = 0;\nres = loop_12;\n}"),
                  SyntaxError);
  CHECK_THROWS_AS(parse("program p { input int a; input int a; output int res;\nres = a;\n}"),
                  SyntaxError);
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nint a = 0;\nres = a;\n}"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse("program p { input int a; output int res;\nint x = 0;\nint x = 1;\nres = x;\n}"),
      SyntaxError);
  // loop_x is not reserved (no digit suffix) and neither is loop4.
  CHECK_NOTHROW(parse("program p { input int a; output int res;\nint loop4 = 0;\nres = loop4;\n}"));
}

TEST_CASE("an output may be declared once in the body") {
  Program p = parse("program p { input int a; output int res;\nint res = 0;\nres = res + a;\n}");
  CHECK(p.body.size() == 2);
  CHECK_THROWS_AS(
      parse("program p { input int a; output int res;\nint res = 0;\nint res = 1;\n}"),
      SyntaxError);
  CHECK_THROWS_AS(parse("program p { input int a; output int res;\nres = 0;\nint res = 1;\n}"),
                  SyntaxError);
  CHECK_THROWS_AS(parse("program p { input int a; output bool res;\nint res = 0;\n}"), TypeError);
}

TEST_CASE("grammar round-trip is a fixpoint on the corpus") {
  for (const auto& name : mt::corpus_names()) {
    Program p = mt::load_corpus_program(name);
    std::string printed = pretty_print(p);
    Program reparsed = parse(printed);
    CHECK_MESSAGE(equal(p, reparsed), "round-trip mismatch for ", name);
    CHECK(pretty_print(reparsed) == printed);
  }
}

TEST_CASE("negative literals round-trip through folding") {
  Program p = parse("program p { input int a; output int res;\nres = a + -3;\n}");
  std::string printed = pretty_print(p);
  CHECK(equal(parse(printed), p));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/gen.hpp"
#include "wise/parser.hpp"
#include "wise/pretty.hpp"

using namespace wise;

namespace {

// Reassociates sequences to the right, which is the shape the parser
// produces (`;` is right-associative and the printer flattens).
StmtPtr right_nest(const StmtPtr& s);

StmtPtr right_nest_onto(const StmtPtr& s, StmtPtr tail) {
  if (const auto* seq = std::get_if<Seq>(&s->node))
    return right_nest_onto(seq->first, right_nest_onto(seq->second, std::move(tail)));
  StmtPtr head = right_nest(s);
  return tail ? mk_seq(std::move(head), std::move(tail)) : head;
}

StmtPtr right_nest(const StmtPtr& s) {
  if (std::get_if<Seq>(&s->node)) return right_nest_onto(s, nullptr);
  if (const auto* w = std::get_if<While>(&s->node))
    return mk_while(w->cond, right_nest(w->body));
  if (const auto* i = std::get_if<If>(&s->node))
    return mk_if(i->cond, right_nest(i->then_branch), right_nest(i->else_branch));
  return s;
}

}  // namespace

TEST_CASE("atomic statements parse") {
  CHECK(equal(parse_program("skip"), mk_skip()));
  CHECK(equal(parse_program("fail"), mk_fail()));
  CHECK(equal(parse_program("x = 3"), mk_assign("x", lit(3))));
}

TEST_CASE("branching example parses to the expected tree") {
  const StmtPtr p = parse_program("if x < 0 then fail else x = x - 1 fi");
  const StmtPtr expected =
      mk_if(cmp(CmpOp::Lt, var_ref("x"), lit(0)), mk_fail(),
            mk_assign("x", sub(var_ref("x"), lit(1))));
  CHECK(equal(p, expected));
}

TEST_CASE("sequencing is right-associative") {
  const StmtPtr p = parse_program("skip ; x = 1 ; fail");
  const StmtPtr expected = mk_seq(mk_skip(), mk_seq(mk_assign("x", lit(1)), mk_fail()));
  CHECK(equal(p, expected));
}

TEST_CASE("arithmetic is left-associative") {
  const StmtPtr p = parse_program("x = 1 - 2 - 3");
  CHECK(equal(p, mk_assign("x", sub(sub(lit(1), lit(2)), lit(3)))));
}

TEST_CASE("boolean precedence: not > comparison > and > or") {
  const StmtPtr p = parse_program("if x <= 1 and not (y == 2) or true then skip else fail fi");
  const BexprPtr expected =
      disj(conj(cmp(CmpOp::Le, var_ref("x"), lit(1)),
                neg(cmp(CmpOp::Eq, var_ref("y"), lit(2)))),
           tt());
  const auto& branch = std::get<If>(p->node);
  CHECK(equal(branch.cond, expected));
}

TEST_CASE("parenthesized groups override precedence") {
  const StmtPtr p = parse_program("x = (1 - 2) - (3 - 4)");
  CHECK(equal(p, mk_assign("x", sub(sub(lit(1), lit(2)), sub(lit(3), lit(4))))));
  const StmtPtr q = parse_program("if (true or false) and false then skip else skip fi");
  const auto& branch = std::get<If>(q->node);
  CHECK(equal(branch.cond, conj(disj(tt(), ff()), ff())));
}

TEST_CASE("negative literals desugar to subtraction from zero") {
  CHECK(equal(parse_program("x = -5"), mk_assign("x", sub(lit(0), lit(5)))));
  CHECK(equal(parse_program("x = y - -2"), mk_assign("x", sub(var_ref("y"), sub(lit(0), lit(2))))));
}

TEST_CASE("comments and whitespace are ignored") {
  const StmtPtr p = parse_program("# leading note\nskip ;  # tail note\n  fail\n");
  CHECK(equal(p, mk_seq(mk_skip(), mk_fail())));
}

TEST_CASE("loops parse") {
  const StmtPtr p = parse_program("while x > 0 do x = x - 1 od");
  CHECK(equal(p, mk_while(cmp(CmpOp::Gt, var_ref("x"), lit(0)),
                          mk_assign("x", sub(var_ref("x"), lit(1))))));
}

TEST_CASE("chained comparisons are rejected") {
  CHECK_THROWS_AS(parse_program("if x < y < z then skip else skip fi"), ParseError);
}

TEST_CASE("reserved words cannot be identifiers") {
  CHECK_THROWS_AS(parse_program("while = 3"), ParseError);
  CHECK_THROWS_AS(parse_program("x = od"), ParseError);
}

TEST_CASE("malformed input reports a position") {
  try {
    parse_program("skip ;\nx = $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 5);
  }
  CHECK_THROWS_AS(parse_program(""), ParseError);
  CHECK_THROWS_AS(parse_program("skip skip"), ParseError);
  CHECK_THROWS_AS(parse_program("if true then skip fi"), ParseError);
}

TEST_CASE("pretty/parse round trip on random expressions") {
  testgen::Rng rng(20240);
  testgen::GenOptions opt;
  opt.lit_lo = 0;  // printed literals are non-negative; negatives are sugar
  for (int i = 0; i < 1000; ++i) {
    const AexprPtr e = testgen::gen_aexpr(rng, 6, opt);
    const StmtPtr wrapped = parse_program("x = " + pretty(e));
    CHECK(equal(std::get<Assign>(wrapped->node).rhs, e));

    const BexprPtr b = testgen::gen_bexpr(rng, 5, opt);
    const StmtPtr cond = parse_program("if " + pretty(b) + " then skip else skip fi");
    CHECK(equal(std::get<If>(cond->node).cond, b));
  }
}

TEST_CASE("pretty/parse round trip on random statements") {
  testgen::Rng rng(20241);
  testgen::GenOptions opt;
  opt.lit_lo = 0;
  for (int i = 0; i < 1000; ++i) {
    const StmtPtr s = testgen::gen_stmt(rng, 4, /*allow_while=*/true, opt);
    CHECK(equal(parse_program(pretty(s)), right_nest(s)));
  }
}

TEST_CASE("parsing and printing are deterministic") {
  const std::string text = "while x > 0 do x = x - 1 ; if x == 1 then fail else skip fi od";
  const StmtPtr a = parse_program(text);
  const StmtPtr b = parse_program(text);
  CHECK(equal(a, b));
  CHECK(pretty(a) == pretty(b));
  CHECK(equal(parse_program(pretty(a)), a));
}

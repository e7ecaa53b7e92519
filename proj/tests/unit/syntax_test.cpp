#include <gtest/gtest.h>

#include <algorithm>

#include "objeval/parser.hpp"
#include "objeval/syntax.hpp"
#include "support.hpp"

using namespace objeval;

namespace {

LambdaTerm var(const char* n) { return LambdaTerm::var(n); }

}  // namespace

TEST(ParseTerm, Abstraction) {
  EXPECT_EQ(parse_term("\\x. y x"), LambdaTerm::abs("x", LambdaTerm::app(var("y"), var("x"))));
}

TEST(ParseTerm, AppliedAbstraction) {
  EXPECT_EQ(parse_term("(\\x. x) h"), LambdaTerm::app(LambdaTerm::abs("x", var("x")), var("h")));
}

TEST(ParseTerm, MissingBodyIsSyntaxError) {
  EXPECT_THROW(parse_term("\\x."), SyntaxError);
}

TEST(ParseTerm, MalformedInputs) {
  for (const char* bad : {"", "(x", "[x, y", "x)", "\\. x", "[x]", "\\x y"}) {
    EXPECT_THROW(parse_term(bad), SyntaxError) << bad;
  }
}

TEST(ParseTerm, ApplicationIsLeftAssociative) {
  EXPECT_EQ(parse_term("f x y"), LambdaTerm::app(LambdaTerm::app(var("f"), var("x")), var("y")));
}

TEST(ParseTerm, MultiBinderAbstraction) {
  EXPECT_EQ(parse_term("\\x, y. x"), LambdaTerm::abs("x", LambdaTerm::abs("y", var("x"))));
}

TEST(ParseTerm, BuiltinsComeFromTheDeclarationList) {
  EXPECT_EQ(parse_term("succ 2").fun().kind(), LambdaTerm::Kind::Builtin);
  EXPECT_EQ(parse_term("succ 2", BuiltinSet{}).fun().kind(), LambdaTerm::Kind::Var);
  EXPECT_EQ(parse_term("f 2", BuiltinSet{"f"}).fun().kind(), LambdaTerm::Kind::Builtin);
}

TEST(ParseTerm, SumOfPair) {
  LambdaTerm t = parse_term("+ [2, 3]");
  EXPECT_EQ(t, LambdaTerm::app(LambdaTerm::builtin("+"),
                               LambdaTerm::pair(LambdaTerm::constant(Value::integer(2)),
                                                LambdaTerm::constant(Value::integer(3)))));
}

TEST(ParseFormula, Atomic) {
  EXPECT_EQ(parse_formula("y = g x"), Formula::eq_cfun("y", "g", "x"));
  EXPECT_EQ(parse_formula("y in x"), Formula::mem("y", "x"));
  EXPECT_EQ(parse_formula("x = y"), Formula::eq_var("x", "y"));
  EXPECT_EQ(parse_formula("z = [x, y]"), Formula::eq_pair("z", "x", "y"));
  EXPECT_EQ(parse_formula("x = 2"), Formula::eq_const("x", Value::integer(2)));
}

TEST(ParseFormula, Quantifier) {
  EXPECT_EQ(parse_formula("exists z:T. z = x(y)"),
            Formula::exists("z", TypeExpr::base("T"), Formula::eq_app("z", "x", "y")));
}

TEST(ParseFormula, Precedence) {
  Formula f = parse_formula("not x = y and y = z or x = z -> true");
  ASSERT_EQ(f.kind(), Formula::Kind::Implies);
  ASSERT_EQ(f.lhs().kind(), Formula::Kind::Or);
  ASSERT_EQ(f.lhs().lhs().kind(), Formula::Kind::And);
  EXPECT_EQ(f.lhs().lhs().lhs().kind(), Formula::Kind::Not);
}

TEST(ParseFormula, Description) {
  Description d = parse_description("iota x:T. x = y");
  EXPECT_EQ(d.bound, "x");
  EXPECT_EQ(d.type, TypeExpr::base("T"));
  EXPECT_EQ(d.body, Formula::eq_var("x", "y"));
}

TEST(AlphaRename, RemovesShadowing) {
  LambdaTerm t = LambdaTerm::abs("x", LambdaTerm::abs("x", var("x")));
  EXPECT_EQ(alpha_rename(t), LambdaTerm::abs("x", LambdaTerm::abs("x1", var("x1"))));
}

TEST(AlphaRename, HygienicTermUnchanged) {
  LambdaTerm t = LambdaTerm::abs("x", var("y"));
  EXPECT_EQ(alpha_rename(t), t);
}

TEST(AlphaRename, FreeOccurrencePreserved) {
  LambdaTerm t = LambdaTerm::app(LambdaTerm::abs("x", var("x")), var("x"));
  EXPECT_EQ(alpha_rename(t), LambdaTerm::app(LambdaTerm::abs("x1", var("x1")), var("x")));
}

TEST(FreeVars, Examples) {
  using V = std::vector<std::string>;
  EXPECT_EQ(free_vars(parse_term("\\x. y x")), V{"y"});
  EXPECT_EQ(free_vars(parse_term("\\x. x")), V{});
  EXPECT_EQ(free_vars(parse_term("y x")), (V{"y", "x"}));
  EXPECT_EQ(free_vars(parse_formula("y = g x")), (V{"y", "x"}));
  EXPECT_EQ(free_vars(parse_formula("forall z:T. z = x")), V{"x"});
}

TEST(Render, Examples) {
  EXPECT_EQ(render(LambdaTerm::abs("x", var("x"))), "\\x. x");
  EXPECT_EQ(render(CombTerm::compose(CombTerm::snd(), CombTerm::fst())), "Snd . Fst");
}

TEST(Render, TermRoundTripToDepthSix) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    LambdaTerm t = testkit::random_syntax(rng, 6);
    ASSERT_EQ(parse_term(render(t)), t) << render(t) << "\n" << dump(t);
  }
}

TEST(Render, TypedTermRoundTrip) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    LambdaTerm t = random_term(rng, 6).term;
    ASSERT_EQ(parse_term(render(t)), t) << render(t);
  }
}

TEST(Render, FormulaRoundTrip) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    Formula f = testkit::random_formula_syntax(rng, 5);
    ASSERT_EQ(parse_formula(render(f)), f) << render(f);
  }
}

TEST(Render, CombRoundTrip) {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    CombTerm c = testkit::random_comb(rng, 5);
    ASSERT_EQ(parse_comb(render(c)), c) << render(c);
  }
}

TEST(Render, LiteralRoundTrip) {
  for (const char* lit : {"2", "-7", "atom:a", "[1, atom:b]", "{3, 1, 2}", "()", "true", "fun{1 -> 2, 2 -> 3}"}) {
    Value v = parse_literal(lit);
    EXPECT_EQ(parse_literal(literal_syntax(v)), v) << lit;
  }
}

TEST(AlphaRename, IdempotentAndPreservesFreeVars) {
  Rng rng(15);
  for (int i = 0; i < 3000; ++i) {
    LambdaTerm t = testkit::random_syntax(rng, 6);
    LambdaTerm once = alpha_rename(t);
    ASSERT_EQ(alpha_rename(once), once) << render(t);
    ASSERT_EQ(free_vars(once), free_vars(t)) << render(t);
    auto bound = bound_vars(once);
    auto sorted = bound;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end()) << render(once);
    for (const auto& v : free_vars(once)) {
      ASSERT_EQ(std::count(bound.begin(), bound.end(), v), 0) << render(once);
    }
  }
}

TEST(FreeVars, AbstractionRemovesBinder) {
  Rng rng(16);
  for (int i = 0; i < 2000; ++i) {
    LambdaTerm b = testkit::random_syntax(rng, 5);
    auto expected = free_vars(b);
    expected.erase(std::remove(expected.begin(), expected.end(), "x"), expected.end());
    ASSERT_EQ(free_vars(LambdaTerm::abs("x", b)), expected) << render(b);
  }
}

TEST(ParseBindings, FileFormat) {
  auto b = parse_bindings("# comment\nh = 2\n\nc = atom:c0\np = [1, atom:a]\ns = {1, 2}\n");
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0].first, "h");
  EXPECT_EQ(b[0].second, Value::integer(2));
  EXPECT_EQ(b[1].second, Value::atom("c0"));
  EXPECT_EQ(b[3].second, Value::set({Value::integer(2), Value::integer(1)}));
  EXPECT_THROW(parse_bindings("h = 1\nh = 2\n"), SyntaxError);
  EXPECT_THROW(parse_bindings("h 1\n"), SyntaxError);
}

TEST(ParseType, Forms) {
  EXPECT_EQ(parse_type("T -> S -> U"),
            TypeExpr::arrow(TypeExpr::base("T"), TypeExpr::arrow(TypeExpr::base("S"), TypeExpr::base("U"))));
  EXPECT_EQ(parse_type("[T * S]"), TypeExpr::power(TypeExpr::prod(TypeExpr::base("T"), TypeExpr::base("S"))));
  EXPECT_EQ(parse_type("Omega"), TypeExpr::truth());
  EXPECT_EQ(parse_type("1"), TypeExpr::unit());
}

#include <gtest/gtest.h>

#include "objeval/eval.hpp"
#include "objeval/pipeline.hpp"
#include "support.hpp"

using namespace objeval;

namespace {

CombTerm C(const char* text) { return parse_comb(text); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Usage;
}

Value succ_oracle(std::int64_t n) { return Value::integer(n + 1); }

Bindings B(std::initializer_list<std::pair<const char*, const char*>> items) {
  Bindings b;
  for (const auto& [n, lit] : items) b.emplace_back(n, parse_literal(lit));
  return b;
}

}  // namespace

TEST(Eval, IdentityClosureAppliedToAtom) {
  Value f = eval(compile(parse_term("\\x. x"), parse_shape("E; x")).code, Value::pair(Value::unit(), Value::placeholder()));
  EXPECT_EQ(eval(CombTerm::eps(), Value::pair(f, Value::atom("a"))), Value::atom("a"));
}

TEST(Eval, CompoundWithSuccessor) {
  Bindings b = B({{"f", "builtin:succ"}, {"h", "2"}});
  EXPECT_EQ(run("(\\x. f x) h", b).value, succ_oracle(2));
}

TEST(Eval, ConstantArrow) {
  EXPECT_EQ(eval(C("Const(c)"), Value::integer(9)), Value::atom("c"));
  EXPECT_EQ(eval(C("Const(c)"), Value::placeholder()), Value::atom("c"));
}

TEST(Eval, Projections) {
  Value p = Value::pair(Value::integer(1), Value::integer(2));
  EXPECT_EQ(eval(CombTerm::fst(), p), Value::integer(1));
  EXPECT_EQ(eval(CombTerm::snd(), p), Value::integer(2));
  EXPECT_EQ(kind_of([] { eval(CombTerm::fst(), Value::integer(1)); }), ErrorKind::ProjectionOnNonPair);
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(Value::closure(CombTerm::snd(), Value::unit()), Value::atom("a")), Value::atom("a"));
  Value plus = eval(C("Cur(Prim(+) . Snd)"), Value::unit());
  EXPECT_EQ(apply(plus, Value::pair(Value::integer(2), Value::integer(3))), Value::integer(5));
  EXPECT_EQ(kind_of([] { apply(Value::atom("a"), Value::atom("b")); }), ErrorKind::ApplyOnNonFunction);
}

TEST(Apply, FiniteGraph) {
  Value g = parse_literal("fun{1 -> 2, 2 -> 0}");
  EXPECT_EQ(apply(g, Value::integer(2)), Value::integer(0));
  EXPECT_EQ(kind_of([&] { apply(g, Value::integer(7)); }), ErrorKind::PrimitiveDomain);
}

TEST(Eval, PrimitiveErrors) {
  EXPECT_EQ(kind_of([] { eval(C("Prim(nope)"), Value::integer(1)); }), ErrorKind::UnknownPrimitive);
  EXPECT_EQ(kind_of([] { eval(C("Prim(succ)"), Value::atom("a")); }), ErrorKind::PrimitiveDomain);
  EXPECT_EQ(kind_of([] { eval(C("Prim(+)"), Value::integer(1)); }), ErrorKind::PrimitiveDomain);
}

TEST(Eval, ErrorsCarryTheSubterm) {
  try {
    eval(C("Snd . Fst"), Value::pair(Value::integer(1), Value::integer(2)));
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.subterm(), CombTerm::snd());
  }
}

TEST(Eval, TraceFormat) {
  std::vector<std::string> lines;
  Evaluator ev(standard_primitives(), [&](const std::string& l) { lines.push_back(l); });
  ev.eval(C("Snd . Fst"), parse_literal("[[1, 2], 3]"));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "  Fst ⊢ [[1, 2], 3] ⇒ [1, 2]");
  EXPECT_EQ(lines[1], "  Snd ⊢ [1, 2] ⇒ 2");
  EXPECT_EQ(lines[2], "Snd . Fst ⊢ [[1, 2], 3] ⇒ 2");
}

TEST(Run, Examples) {
  EXPECT_EQ(run("(\\x. x) h", B({{"h", "atom:a"}})).value, Value::atom("a"));
  EXPECT_EQ(run("+ [2, 3]").value, Value::integer(5));
  EXPECT_EQ(run("c", B({{"c", "atom:c0"}})).value, Value::atom("c0"));
}

TEST(Run, Errors) {
  EXPECT_EQ(kind_of([] { run("y"); }), ErrorKind::UnboundVariable);
  EXPECT_EQ(kind_of([] { run("\\x."); }), ErrorKind::Syntax);
  EXPECT_EQ(kind_of([] { run("succ h", B({{"h", "atom:a"}})); }), ErrorKind::UntypableApplication);
  EXPECT_EQ(kind_of([] { run("f 2", B({{"f", "[1, 2]"}})); }), ErrorKind::UntypableApplication);
}

TEST(Run, ShapeFollowsBindingsThenBinders) {
  RunResult r = run("(\\x. f x) h", B({{"f", "builtin:succ"}, {"h", "2"}}));
  EXPECT_EQ(render(r.unit.shape), "E; f:? -> ?; h:nat; x");
  EXPECT_EQ(r.unit.code, C("Eps . <Cur(Eps . <Snd . Fst . Fst . Fst, Snd>), Snd . Fst>"));
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_eval(parse_term("(\\x. x) h"), B({{"h", "atom:a"}})), Value::atom("a"));
  EXPECT_EQ(oracle_eval(parse_term("(\\x. f x) h"), B({{"f", "builtin:succ"}, {"h", "2"}})), succ_oracle(2));
  EXPECT_EQ(oracle_eval(parse_term("+ [2, 3]")), Value::integer(5));
}

TEST(Oracle, CaptureAvoidingSubstitution) {
  // (\y. \x. y) x must not capture the free x.
  LambdaTerm t = parse_term("((\\y. \\x. y) x) 1");
  EXPECT_EQ(oracle_eval(t, B({{"x", "7"}})), Value::integer(7));
  EXPECT_EQ(run(t, B({{"x", "7"}})).value, Value::integer(7));
}

TEST(Oracle, AgreesWithRun) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    TermCase c = random_term(rng);
    Value expected = oracle_eval(c.term, c.bindings);
    ASSERT_EQ(run(c.term, c.bindings).value, expected) << render(c.term);
  }
}

TEST(Placeholder, PoisonRaisesOnRead) {
  EXPECT_EQ(kind_of([] { eval(CombTerm::snd(), Value::pair(Value::unit(), Value::placeholder())); }),
            ErrorKind::PlaceholderRead);
}

TEST(Placeholder, CompiledBodiesNeverReadBinderSlotsEarly) {
  // Binder slots hold the poison; any read before Subst would raise.
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    TermCase c = random_term(rng);
    ASSERT_NO_THROW(run(c.term, c.bindings)) << render(c.term);
  }
}

TEST(OrderIndependence, PairComponentsCommute) {
  // Swapping the components of a pair and swapping back gives the same value.
  Rng rng(23);
  int checked = 0;
  for (int i = 0; i < 5000 && checked < 500; ++i) {
    CombTerm a = testkit::random_comb(rng, 3), b = testkit::random_comb(rng, 3);
    Value in = testkit::random_input(rng);
    auto va = testkit::try_eval(a, in);
    auto vb = testkit::try_eval(b, in);
    if (!va || !vb) continue;
    ++checked;
    Value ab = eval(CombTerm::pair(a, b), in);
    Value ba = eval(CombTerm::pair(b, a), in);
    ASSERT_EQ(ab, Value::pair(*va, *vb));
    ASSERT_EQ(ab, Value::pair(ba.second(), ba.first()));
  }
  EXPECT_EQ(checked, 500);
}

TEST(OrderIndependence, SumOperands) {
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      std::string xy = "+ [" + std::to_string(x) + ", " + std::to_string(y) + "]";
      std::string yx = "+ [" + std::to_string(y) + ", " + std::to_string(x) + "]";
      EXPECT_EQ(run(xy).value, run(yx).value);
    }
  }
}

TEST(NormalizationSound, CompiledPopulation) {
  Rng rng(24);
  for (int i = 0; i < 1000; ++i) {
    TermCase c = random_term(rng);
    RunResult r = run(c.term, c.bindings);
    ASSERT_EQ(eval(r.unit.raw, r.env), r.value) << render(c.term);
  }
}

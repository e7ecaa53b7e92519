#include <gtest/gtest.h>

#include "objeval/compiler.hpp"
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

void collect_cur_bodies(const CombTerm& t, std::vector<CombTerm>& out) {
  switch (t.kind()) {
    case CombTerm::Kind::Cur:
      out.push_back(t.body());
      collect_cur_bodies(t.body(), out);
      return;
    case CombTerm::Kind::Comp:
      collect_cur_bodies(t.outer(), out);
      collect_cur_bodies(t.inner(), out);
      return;
    case CombTerm::Kind::Pair:
      collect_cur_bodies(t.left(), out);
      collect_cur_bodies(t.right(), out);
      return;
    default: return;
  }
}

}  // namespace

TEST(Shape, ParseAndRender) {
  EnvShape s = parse_shape("E; y:Dy; x:Dx");
  ASSERT_EQ(s.slots.size(), 2u);
  EXPECT_EQ(s.slots[1].name, "x");
  EXPECT_EQ(s.slots[1].type, TypeExpr::base("Dx"));
  EXPECT_EQ(render(s), "E; y:Dy; x:Dx");
  EnvShape bare = parse_shape("D; x");
  EXPECT_EQ(bare.base, "D");
  EXPECT_EQ(bare.slots.size(), 1u);
  EXPECT_EQ(parse_shape("y:T; x").slots.size(), 2u);
}

TEST(Access, Examples) {
  EXPECT_EQ(access("x", parse_shape("E; y; x")), CombTerm::snd());
  EXPECT_EQ(access("f", parse_shape("E; f; x")), C("Snd . Fst"));
  EXPECT_EQ(access("z", parse_shape("E; z")), CombTerm::snd());
  EXPECT_EQ(access("y", parse_shape("E; y; x; w")), C("Snd . Fst . Fst"));
  EXPECT_EQ(kind_of([] { access("q", parse_shape("E; z")); }), ErrorKind::UnknownVariable);
}

TEST(Access, SoundExhaustive) {
  const std::vector<Value> atoms = {Value::atom("a"), Value::atom("b"), Value::atom("c")};
  const char* names[] = {"u", "v", "w", "u"};  // the last slot shadows the first
  for (std::size_t n = 1; n <= 4; ++n) {
    EnvShape shape;
    for (std::size_t i = 0; i < n; ++i) shape.slots.push_back(Slot{names[i]});
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= atoms.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Value> vals;
      Value env = Value::unit();
      for (std::size_t i = 0, c = code; i < n; ++i, c /= atoms.size()) {
        vals.push_back(atoms[c % atoms.size()]);
        env = Value::pair(env, vals.back());
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t latest = i;
        for (std::size_t j = i + 1; j < n; ++j) latest = shape.slots[j].name == shape.slots[i].name ? j : latest;
        ASSERT_EQ(eval(access(shape.slots[i].name, shape), env), vals[latest]);
      }
    }
  }
}

TEST(SubstMap, Examples) {
  EXPECT_EQ(subst_map(parse_shape("E; y; x"), "x"), C("<Fst . Fst, Snd>"));
  EXPECT_EQ(subst_map(parse_shape("E; x"), "x"), C("<Fst . Fst, Snd>"));
  EXPECT_EQ(kind_of([] { subst_map(parse_shape("E; x; y"), "x"); }), ErrorKind::NotOutermost);
}

TEST(SubstMap, OverwritesTheLastSlot) {
  Value env = Value::pair(Value::pair(Value::unit(), Value::atom("y0")), Value::atom("x_old"));
  Value in = Value::pair(env, Value::atom("h"));
  EXPECT_EQ(eval(subst_map(parse_shape("E; y; x"), "x"), in),
            Value::pair(Value::pair(Value::unit(), Value::atom("y0")), Value::atom("h")));
}

TEST(Compile, IdentityAbstraction) {
  EXPECT_EQ(compile(parse_term("\\x. x"), parse_shape("E; x")).code, C("Cur(Snd)"));
}

TEST(Compile, GoldenAccessFunction) {
  CompiledUnit u = compile(parse_term("\\x. y x"), parse_shape("E; y:Dy; x:Dx"));
  EXPECT_EQ(u.raw, C("Cur((Eps . <Snd . Fst, Snd>) . <Fst . Fst, Snd>)"));
  EXPECT_EQ(u.code, C("Cur(Eps . <Snd . Fst . Fst, Snd>)"));
}

TEST(Compile, CompoundWithFunctionSlot) {
  CompiledUnit u = compile(parse_term("\\x. f x"), parse_shape("E; f; x"));
  EXPECT_EQ(u.code, normalize(C("Cur((Eps . <Snd . Fst, Snd>) . <Fst . Fst, Snd>)")));
}

TEST(Compile, ConstantsGoThroughCanonicalEmbedding) {
  EXPECT_EQ(compile(parse_term("2"), EnvShape{}).code, C("Can(nat) . Const(2)"));
  EXPECT_EQ(compile(parse_term("atom:a"), EnvShape{}).code, C("Can(atom) . Const(a)"));
}

TEST(Compile, BinderMissingFromShapeExtends) {
  CompiledUnit u = compile(parse_term("\\x. x"), EnvShape{});
  EXPECT_EQ(u.code, C("Cur(Snd) . <Id, Const(?)>"));
  Value f = eval(u.code, Value::unit());
  EXPECT_EQ(apply(f, Value::atom("a")), Value::atom("a"));
}

TEST(Compile, BinderInsideShapeTruncates) {
  CompiledUnit u = compile(parse_term("\\x. y"), parse_shape("E; y; x; w"));
  Value env = Value::pair(Value::pair(Value::pair(Value::unit(), Value::atom("y0")), Value::placeholder()),
                          Value::atom("w0"));
  EXPECT_EQ(apply(eval(u.code, env), Value::atom("h")), Value::atom("y0"));
  EXPECT_EQ(kind_of([] { compile(parse_term("\\x. w"), parse_shape("E; y; x; w")); }), ErrorKind::ShapeMismatch);
}

TEST(Compile, Errors) {
  EXPECT_EQ(kind_of([] { compile(parse_term("q"), EnvShape{}); }), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of([] { compile(parse_term("2 3"), EnvShape{}); }), ErrorKind::UntypableApplication);
  EXPECT_EQ(kind_of([] { compile(parse_term("atom:a 3"), EnvShape{}); }), ErrorKind::UntypableApplication);
  EXPECT_EQ(kind_of([] { compile(parse_term("succ atom:a"), EnvShape{}); }), ErrorKind::UntypableApplication);
  EXPECT_EQ(kind_of([] { compile(parse_term("sq 2", BuiltinSet{"sq"}), EnvShape{}, default_builtins()); }),
            ErrorKind::UnknownBuiltin);
}

TEST(Compile, ResultTypes) {
  EXPECT_EQ(compile(parse_term("succ 2"), EnvShape{}).result_ty, TypeExpr::base("nat"));
  EXPECT_EQ(compile(parse_term("+ [2, 3]"), EnvShape{}).result_ty, TypeExpr::base("nat"));
  EXPECT_EQ(compile(parse_term("[2, atom:a]"), EnvShape{}).result_ty,
            TypeExpr::prod(TypeExpr::base("nat"), TypeExpr::base("atom")));
  EXPECT_EQ(compile(parse_term("f x"), parse_shape("E; f:D -> S; x:D")).result_ty, TypeExpr::base("S"));
  EXPECT_EQ(kind_of([] { compile(parse_term("f x"), parse_shape("E; f:D -> S; x:T")); }),
            ErrorKind::UntypableApplication);
}

TEST(CompileBuiltinApp, Examples) {
  TypeExpr t = TypeExpr::base("T");
  EXPECT_EQ(compile_builtin_app("+", TypeExpr::prod(t, t)), C("Cur(Prim(+) . Snd)"));
  EXPECT_EQ(compile_builtin_app("can_T", t), CombTerm::cur(CombTerm::compose(CombTerm::can(t), CombTerm::snd())));
  EXPECT_EQ(kind_of([&] { compile_builtin_app("nope", t); }), ErrorKind::UnknownBuiltin);
}

TEST(CompileFormula, ReflexivityIsConstantlyTrue) {
  CompiledUnit u = compile_formula(parse_formula("x = x"), parse_shape("E; x"), "x");
  Value i = Value::pair(Value::unit(), Value::placeholder());
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    Value t = testkit::random_value(rng, 2);
    EXPECT_EQ(eval(u.code, Value::pair(i, t)), Value::boolean(true));
  }
}

TEST(CompileFormula, SuccessorAgainstHandOracle) {
  CompiledUnit u = compile_formula(parse_formula("y = succ x"), parse_shape("E; y:nat; x:nat"), "x");
  auto env_with = [](std::int64_t y) {
    return Value::pair(Value::pair(Value::unit(), Value::integer(y)), Value::placeholder());
  };
  for (std::int64_t y = 0; y <= 2; ++y) {
    for (std::int64_t x = 0; x <= 2; ++x) {
      Value got = eval(u.code, Value::pair(env_with(y), Value::integer(x)));
      EXPECT_EQ(got, Value::boolean(y == x + 1)) << "y=" << y << " x=" << x;
    }
  }
  Value env = env_with(2);
  EXPECT_EQ(eval(u.code, Value::pair(env, Value::integer(1))), Value::boolean(true));
  EXPECT_EQ(eval(u.code, Value::pair(env, Value::integer(0))), Value::boolean(false));
}

TEST(CompileFormula, CurryingIdentity) {
  // ||phi||[i, h] = Cur(||phi||) i (h)
  CompiledUnit u = compile_formula(parse_formula("y = x or x in s"), parse_shape("E; y:nat; s:[nat]; x:nat"), "x");
  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    std::vector<Value> members;
    for (int m = 0; m < 3; ++m) {
      if (pick(rng, 2)) members.push_back(Value::integer(m));
    }
    Value amb = Value::pair(Value::pair(Value::unit(), Value::integer(static_cast<std::int64_t>(pick(rng, 3)))),
                            Value::set(members));
    Value i = Value::pair(amb, Value::placeholder());
    Value h = Value::integer(static_cast<std::int64_t>(pick(rng, 3)));
    Value direct = eval(u.code, Value::pair(i, h));
    Value curried = apply(eval(CombTerm::cur(u.code), i), h);
    ASSERT_EQ(direct, curried);
  }
}

TEST(CompileFormula, RawFormHasSubstitution) {
  CompiledUnit u = compile_formula(parse_formula("x = y"), parse_shape("E; y; x"), "x");
  EXPECT_EQ(kind_of([] { compile_formula(parse_formula("x = y"), parse_shape("E; x; y"), "x"); }),
            ErrorKind::NotOutermost);
  ASSERT_EQ(u.raw.kind(), CombTerm::Kind::Comp);
  EXPECT_EQ(u.raw.outer(), CombTerm::eps());
  EXPECT_EQ(u.code, normalize(u.raw));
}

TEST(CurryingLaw, CompiledBodies) {
  Rng rng(9);
  std::size_t checked = 0;
  for (int n = 0; n < 400; ++n) {
    TermCase c = random_term(rng);
    RunResult r = run(c.term, c.bindings);
    std::vector<CombTerm> bodies;
    collect_cur_bodies(r.unit.code, bodies);
    collect_cur_bodies(r.unit.raw, bodies);
    for (const auto& body : bodies) {
      for (int k = 0; k < 3; ++k) {
        Value i = pick(rng, 2) ? r.env : testkit::random_input(rng);
        Value a = testkit::random_value(rng, 1);
        auto direct = testkit::try_eval(body, Value::pair(i, a));
        if (!direct) continue;
        Value closure = eval(CombTerm::cur(body), i);
        Value via_eps = eval(CombTerm::eps(), Value::pair(closure, a));
        ASSERT_EQ(via_eps, *direct) << render(body);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200u);
}

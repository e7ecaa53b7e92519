#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "objeval/comb.hpp"
#include "objeval/error.hpp"
#include "objeval/eval.hpp"
#include "objeval/generate.hpp"
#include "objeval/syntax.hpp"
#include "objeval/value.hpp"

namespace objeval::testkit {

inline Value random_value(Rng& rng, int depth) {
  std::size_t k = pick(rng, depth > 0 ? 4 : 2);
  switch (k) {
    case 0: return Value::integer(static_cast<std::int64_t>(pick(rng, 5)));
    case 1: return Value::atom("a" + std::to_string(pick(rng, 3)));
    default: return Value::pair(random_value(rng, depth - 1), random_value(rng, depth - 1));
  }
}

// Environment-like input [[(), v1], v2] or a random nested value.
inline Value random_input(Rng& rng) {
  if (pick(rng, 3) == 0) return random_value(rng, 3);
  Value env = Value::unit();
  std::size_t n = 1 + pick(rng, 3);
  for (std::size_t i = 0; i < n; ++i) env = Value::pair(env, random_value(rng, 1));
  return env;
}

// Code over Id, Fst, Snd, Eps, Const, succ, composition, pairing and Cur.
// Compositions are built raw, so left-nested chains occur.
inline CombTerm random_comb(Rng& rng, int depth) {
  if (depth <= 0 || pick(rng, 4) == 0) {
    switch (pick(rng, 6)) {
      case 0: return CombTerm::id();
      case 1: return CombTerm::fst();
      case 2: return CombTerm::snd();
      case 3: return CombTerm::eps();
      case 4: return CombTerm::constant(random_value(rng, 1));
      default: return CombTerm::prim("succ");
    }
  }
  switch (pick(rng, 5)) {
    case 0:
    case 1: return CombTerm::compose(random_comb(rng, depth - 1), random_comb(rng, depth - 1));
    case 2: return CombTerm::pair(random_comb(rng, depth - 1), random_comb(rng, depth - 1));
    case 3: return CombTerm::cur(random_comb(rng, depth - 1));
    default:
      return CombTerm::compose(CombTerm::eps(),
                               CombTerm::pair(random_comb(rng, depth - 1), random_comb(rng, depth - 1)));
  }
}

inline std::optional<Value> try_eval(const CombTerm& code, const Value& input) {
  try {
    return eval(code, input);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::optional<Value> try_apply(const Value& f, const Value& arg) {
  try {
    return apply(f, arg);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline const std::vector<Value>& probes() {
  static const std::vector<Value> ps = {
      Value::integer(0), Value::integer(2), Value::atom("a0"), Value::unit(),
      Value::pair(Value::integer(1), Value::atom("a1")),
      Value::pair(Value::pair(Value::unit(), Value::integer(3)), Value::integer(4)),
  };
  return ps;
}

// Function values are compared by applying them to probe arguments: wherever
// the left one is defined the right one must be defined and agree. Past the
// depth bound a function agrees with anything.
inline bool agree(const Value& a, const Value& b, int depth = 3) {
  auto fun = [](const Value& v) { return v.kind() == Value::Kind::Closure || v.kind() == Value::Kind::Fun; };
  if (depth == 0 && (fun(a) || fun(b))) return true;
  if (fun(a) && fun(b)) {
    for (const auto& p : probes()) {
      auto ra = try_apply(a, p);
      if (!ra) continue;
      auto rb = try_apply(b, p);
      if (!rb || !agree(*ra, *rb, depth - 1)) return false;
    }
    return true;
  }
  if (fun(a)) {
    for (const auto& p : probes()) {
      if (try_apply(a, p)) return false;
    }
    return true;
  }
  if (a.is_pair() && b.is_pair()) return agree(a.first(), b.first(), depth) && agree(a.second(), b.second(), depth);
  return a == b;
}

// Untyped, possibly ill-scoped terms for syntax properties.
inline LambdaTerm random_syntax(Rng& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "f", "g1", "x_2"};
  if (depth <= 1 || pick(rng, 4) == 0) {
    switch (pick(rng, 5)) {
      case 0: return LambdaTerm::constant(Value::integer(static_cast<std::int64_t>(pick(rng, 20))));
      case 1: return LambdaTerm::constant(Value::atom("c" + std::to_string(pick(rng, 3))));
      case 2: return LambdaTerm::builtin(pick(rng, 2) ? "succ" : "+");
      default: return LambdaTerm::var(names[pick(rng, 6)]);
    }
  }
  switch (pick(rng, 3)) {
    case 0: return LambdaTerm::app(random_syntax(rng, depth - 1), random_syntax(rng, depth - 1));
    case 1: return LambdaTerm::abs(names[pick(rng, 6)], random_syntax(rng, depth - 1));
    default: return LambdaTerm::pair(random_syntax(rng, depth - 1), random_syntax(rng, depth - 1));
  }
}

inline Formula random_formula_syntax(Rng& rng, int depth) {
  static const char* names[] = {"x", "y", "z", "w"};
  auto n = [&] { return std::string(names[pick(rng, 4)]); };
  if (depth <= 1 || pick(rng, 3) == 0) {
    switch (pick(rng, 8)) {
      case 0: return Formula::eq_var(n(), n());
      case 1: return Formula::eq_const(n(), Value::integer(static_cast<std::int64_t>(pick(rng, 9))));
      case 2: return Formula::eq_cfun(n(), "g", n());
      case 3: return Formula::eq_pair(n(), n(), n());
      case 4: return Formula::eq_app(n(), n(), n());
      case 5: return Formula::mem(n(), n());
      case 6: return Formula::eq_const(n(), Value::atom("t1"));
      default: return Formula::truth(pick(rng, 2) == 0);
    }
  }
  static const TypeExpr types[] = {TypeExpr::base("T"), TypeExpr::power(TypeExpr::base("S")),
                                   TypeExpr::prod(TypeExpr::base("T"), TypeExpr::base("S")),
                                   TypeExpr::arrow(TypeExpr::base("T"), TypeExpr::base("S"))};
  switch (pick(rng, 6)) {
    case 0: return Formula::negation(random_formula_syntax(rng, depth - 1));
    case 1: return Formula::conj(random_formula_syntax(rng, depth - 1), random_formula_syntax(rng, depth - 1));
    case 2: return Formula::disj(random_formula_syntax(rng, depth - 1), random_formula_syntax(rng, depth - 1));
    case 3: return Formula::implies(random_formula_syntax(rng, depth - 1), random_formula_syntax(rng, depth - 1));
    case 4: return Formula::forall(n(), types[pick(rng, 4)], random_formula_syntax(rng, depth - 1));
    default: return Formula::exists(n(), types[pick(rng, 4)], random_formula_syntax(rng, depth - 1));
  }
}

}  // namespace objeval::testkit

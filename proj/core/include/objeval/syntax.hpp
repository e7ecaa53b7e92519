#pragma once

#include <memory>
#include <string>
#include <vector>

#include "objeval/types.hpp"
#include "objeval/value.hpp"

namespace objeval {

// Surface lambda terms. Immutable, structurally shared.
class LambdaTerm {
 public:
  enum class Kind { Var, Const, Builtin, App, Abs, Pair };

  static LambdaTerm var(std::string name);
  static LambdaTerm constant(Value literal);  // integer or named atom
  static LambdaTerm builtin(std::string name);
  static LambdaTerm app(LambdaTerm fun, LambdaTerm arg);
  static LambdaTerm abs(std::string bound, LambdaTerm body);
  static LambdaTerm pair(LambdaTerm left, LambdaTerm right);

  Kind kind() const;
  const std::string& name() const;  // Var, Builtin, Abs (bound name)
  const Value& literal() const;     // Const
  const LambdaTerm& fun() const;    // App
  const LambdaTerm& arg() const;    // App
  const LambdaTerm& body() const;   // Abs
  const LambdaTerm& left() const;   // Pair
  const LambdaTerm& right() const;  // Pair

  std::size_t depth() const;

  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b);

 private:
  struct Node;
  explicit LambdaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// First-order formulas over typed variables. The atomic shapes are
//   x = y,  x = <literal>,  y = g x,  z = [x, y],  z = x(y),  y in x
// plus the constants true/false.
class Formula {
 public:
  enum class Kind {
    EqVar, EqConst, EqCFun, EqPair, EqApp, Mem,
    True, False, Not, And, Or, Implies, Forall, Exists
  };

  static Formula eq_var(std::string x, std::string y);
  static Formula eq_const(std::string x, Value literal);
  static Formula eq_cfun(std::string y, std::string g, std::string x);
  static Formula eq_pair(std::string z, std::string x, std::string y);
  static Formula eq_app(std::string z, std::string x, std::string y);
  static Formula mem(std::string y, std::string x);
  static Formula truth(bool value);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::string var, TypeExpr type, Formula body);
  static Formula exists(std::string var, TypeExpr type, Formula body);

  Kind kind() const;
  bool is_atomic() const;
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }

  // Identifier operands in source order:
  //   EqVar (x, y), EqConst (x), EqCFun (y, g, x), EqPair (z, x, y),
  //   EqApp (z, x, y), Mem (y, x), quantifiers (bound variable).
  const std::vector<std::string>& names() const;
  const Value& literal() const;   // EqConst
  const TypeExpr& type() const;   // quantifiers
  const Formula& lhs() const;     // Not operand, binary left, quantifier body
  const Formula& rhs() const;     // binary right

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// iota x:T. phi -- "the unique x of type T such that phi".
struct Description {
  std::string bound;
  TypeExpr type;
  Formula body;
};

// Free variables in order of first occurrence. For formulas the builtin name
// of y = g x is not a variable.
std::vector<std::string> free_vars(const LambdaTerm& term);
std::vector<std::string> free_vars(const Formula& formula);

// Alpha-equivalent term whose bound names are pairwise distinct and distinct
// from every free name and from `avoid`. Fresh names are formed by appending
// a counter.
LambdaTerm alpha_rename(const LambdaTerm& term, const std::vector<std::string>& avoid = {});

// Binders of all abstractions in pre-order.
std::vector<std::string> bound_vars(const LambdaTerm& term);

std::string render(const LambdaTerm& term);
std::string render(const Formula& formula);
std::string render(const Description& description);

// Structural dump, e.g. Abs(x, App(Var(y), Var(x))).
std::string dump(const LambdaTerm& term);
std::string dump(const Formula& formula);

}  // namespace objeval

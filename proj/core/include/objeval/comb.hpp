#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>

#include "objeval/types.hpp"
#include "objeval/value.hpp"

namespace objeval {

// Categorical combinator code. Comp(outer, inner) denotes outer . inner, i.e.
// inner is applied first.
class CombTerm {
 public:
  enum class Kind { Id, Fst, Snd, Comp, Pair, Cur, Eps, Const, Prim, Can };

  static CombTerm id();
  static CombTerm fst();
  static CombTerm snd();
  static CombTerm eps();
  // Raw composition node, no simplification. See comp() for the smart form.
  static CombTerm compose(CombTerm outer, CombTerm inner);
  static CombTerm pair(CombTerm left, CombTerm right);
  static CombTerm cur(CombTerm body);
  static CombTerm constant(Value v);
  static CombTerm prim(std::string name);
  static CombTerm can(TypeExpr type);

  Kind kind() const;
  const CombTerm& outer() const;  // Comp
  const CombTerm& inner() const;  // Comp
  const CombTerm& left() const;   // Pair
  const CombTerm& right() const;  // Pair
  const CombTerm& body() const;   // Cur
  const Value& value() const;     // Const
  const std::string& name() const;  // Prim
  const TypeExpr& type() const;   // Can

  std::size_t size() const;

  friend std::strong_ordering operator<=>(const CombTerm& a, const CombTerm& b);
  friend bool operator==(const CombTerm& a, const CombTerm& b);

 private:
  struct Node;
  static std::shared_ptr<const Node> leaf(Kind kind);
  explicit CombTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// a . b with identities absorbed and the chain kept right-nested.
CombTerm comp(const CombTerm& a, const CombTerm& b);

// Fst^k: k-fold composition of Fst (Id for k = 0).
CombTerm fst_power(std::size_t k);

// The arrow a builtin name stands for: Can(T) for "can_T", Prim(name)
// otherwise.
CombTerm builtin_arrow(const std::string& name);

// Notation: Id, Fst, Snd, Eps, Cur(t), <a, b>, a . b, Const(lit), Prim(name),
// Can(T). A left-nested composition is parenthesised so that parsing the text
// gives back the same tree.
std::string render(const CombTerm& term);

}  // namespace objeval

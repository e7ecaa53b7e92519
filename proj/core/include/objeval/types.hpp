#pragma once

#include <memory>
#include <string>

namespace objeval {

// Type expressions: base symbols, 1, T * S, T -> S, [T] and the truth-value
// object Omega. Immutable; copies share structure.
class TypeExpr {
 public:
  enum class Kind { Base, Unit, Prod, Arrow, Power, Truth };

  static TypeExpr base(std::string name);
  static TypeExpr unit();
  static TypeExpr prod(TypeExpr left, TypeExpr right);
  static TypeExpr arrow(TypeExpr from, TypeExpr to);
  static TypeExpr power(TypeExpr element);
  static TypeExpr truth();

  // Placeholder for "not determined" in the compiler's syntax-directed typing.
  static TypeExpr unknown();
  bool is_unknown() const;

  Kind kind() const;
  const std::string& name() const;  // Base only
  const TypeExpr& left() const;     // Prod/Arrow first component, Power element
  const TypeExpr& right() const;    // Prod/Arrow second component

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator<(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string render(const TypeExpr& type);

}  // namespace objeval

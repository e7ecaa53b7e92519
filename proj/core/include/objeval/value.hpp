#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace objeval {

class CombTerm;

// Runtime values. Atoms are either named or integers; sets keep their elements
// sorted and duplicate-free; finite functions keep their graph sorted by
// argument. Values are immutable and share structure, so they are cheap to
// copy and safe to share between threads.
class Value {
 public:
  enum class Kind { Int, Name, Pair, Closure, Set, Fun, Bool, Unit, Placeholder };

  Value();  // unit

  static Value integer(std::int64_t n);
  static Value atom(std::string name);
  static Value pair(Value left, Value right);
  static Value closure(CombTerm body, Value captured);
  static Value set(std::vector<Value> elements);
  // Throws Error(TypeMismatch) when the graph maps an argument twice.
  static Value fun(std::vector<std::pair<Value, Value>> graph);
  static Value boolean(bool b);
  static Value unit();
  // Marks an environment slot that must be overwritten before it is read.
  static Value placeholder();

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Int || kind() == Kind::Name; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_set() const { return kind() == Kind::Set; }

  std::int64_t as_int() const;
  const std::string& atom_name() const;
  bool as_bool() const;
  const Value& first() const;
  const Value& second() const;
  const CombTerm& closure_body() const;
  const Value& closure_env() const;
  std::span<const Value> elements() const;  // Set
  std::span<const std::pair<Value, Value>> graph() const;  // Fun

  bool contains(const Value& element) const;          // Set
  std::optional<Value> lookup(const Value& arg) const;  // Fun

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Human-readable form: atoms by bare name, closures as closure(code; env).
std::string render(const Value& value);

// Literal syntax accepted by parse_literal: named atoms are written atom:<name>.
std::string literal_syntax(const Value& value);

}  // namespace objeval

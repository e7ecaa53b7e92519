#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "objeval/comb.hpp"
#include "objeval/error.hpp"
#include "objeval/normalize.hpp"
#include "objeval/value.hpp"

namespace objeval {

class Evaluator;

// A primitive receives the value its code is applied to and may call back
// into the evaluator (quantifiers apply their argument to every element).
using Primitive = std::function<Value(const Value& arg, Evaluator& ev)>;

class PrimitiveTable {
 public:
  void define(std::string name, Primitive fn);
  const Primitive* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Primitive, std::less<>> table_;
};

// +, succ, id, eq, mem, not, and, or, implies. Can(T) needs no entry.
const PrimitiveTable& standard_primitives();

// forall@T and exists@T over the given carrier.
void define_quantifiers(PrimitiveTable& table, const TypeExpr& type, std::vector<Value> carrier);

// A primitive that looks its argument up in a finite graph.
void define_graph(PrimitiveTable& table, const std::string& name, Value graph);

class EvalError : public Error {
 public:
  EvalError(ErrorKind kind, CombTerm subterm, const std::string& message);
  const CombTerm& subterm() const noexcept { return subterm_; }

 private:
  CombTerm subterm_;
};

// Strict evaluation; pair components are evaluated left before right. With a
// trace sink every evaluation step is reported after it completes, as
//   <indent>code ⊢ input ⇒ output
// with two spaces of indent per nesting level.
class Evaluator {
 public:
  explicit Evaluator(const PrimitiveTable& prims = standard_primitives(), TraceSink trace = {});

  Value eval(const CombTerm& code, const Value& input);
  Value apply(const Value& fun, const Value& arg);

 private:
  Value step(const CombTerm& code, const Value& input);
  Value project(const CombTerm& code, const Value& input, bool first);

  const PrimitiveTable& prims_;
  TraceSink trace_;
  std::size_t depth_ = 0;
};

Value eval(const CombTerm& code, const Value& input, const PrimitiveTable& prims = standard_primitives());
Value apply(const Value& fun, const Value& arg, const PrimitiveTable& prims = standard_primitives());

}  // namespace objeval

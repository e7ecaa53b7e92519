#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "objeval/compiler.hpp"
#include "objeval/eval.hpp"
#include "objeval/parser.hpp"

namespace objeval {

using Bindings = std::vector<std::pair<std::string, Value>>;

struct RunOptions {
  BuiltinSet builtins = default_builtins();
  const PrimitiveTable* primitives = &standard_primitives();
  TraceSink rewrites;  // normalizer steps
  TraceSink steps;     // evaluator steps
};

struct RunResult {
  Value value;
  CompiledUnit unit;
  Value env;
};

// Slots for the bindings in order, then one slot per binder of an
// abstraction that is not inside another abstraction, in pre-order.
EnvShape run_shape(const LambdaTerm& renamed, const Bindings& bindings);

// Nested pair environment for shape; slots without a binding hold the
// placeholder value.
Value build_env(const EnvShape& shape, const Bindings& bindings);

// parse, alpha_rename, compile, normalize, eval.
RunResult run(std::string_view text, const Bindings& bindings = {}, const RunOptions& options = {});
RunResult run(const LambdaTerm& term, const Bindings& bindings = {}, const RunOptions& options = {});

// Reference semantics by capture-avoiding substitution on surface terms. It
// shares no code with the compiler or the evaluator. Builtins: +, succ, id.
Value oracle_eval(const LambdaTerm& term, const Bindings& bindings = {});

}  // namespace objeval

#include "objeval/pipeline.hpp"

#include <algorithm>

namespace objeval {

namespace {

void outermost_binders(const LambdaTerm& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Abs: out.push_back(t.name()); return;
    case LambdaTerm::Kind::App:
      outermost_binders(t.fun(), out);
      outermost_binders(t.arg(), out);
      return;
    case LambdaTerm::Kind::Pair:
      outermost_binders(t.left(), out);
      outermost_binders(t.right(), out);
      return;
    default: return;
  }
}

}  // namespace

EnvShape run_shape(const LambdaTerm& renamed, const Bindings& bindings) {
  EnvShape shape;
  for (const auto& [name, v] : bindings) shape.slots.push_back(Slot{name, value_type(v)});
  std::vector<std::string> binders;
  outermost_binders(renamed, binders);
  for (auto& b : binders) shape.slots.push_back(Slot{std::move(b), TypeExpr::unknown()});
  return shape;
}

Value build_env(const EnvShape& shape, const Bindings& bindings) {
  Value env = Value::unit();
  std::vector<bool> used(bindings.size(), false);
  for (const auto& slot : shape.slots) {
    Value v = Value::placeholder();
    for (std::size_t i = 0; i < bindings.size(); ++i) {
      if (!used[i] && bindings[i].first == slot.name) {
        v = bindings[i].second;
        used[i] = true;
        break;
      }
    }
    env = Value::pair(std::move(env), std::move(v));
  }
  return env;
}

RunResult run(std::string_view text, const Bindings& bindings, const RunOptions& options) {
  return run(parse_term(text, options.builtins), bindings, options);
}

RunResult run(const LambdaTerm& term, const Bindings& bindings, const RunOptions& options) {
  std::vector<std::string> names;
  for (const auto& b : bindings) names.push_back(b.first);
  LambdaTerm renamed = alpha_rename(term, names);
  for (const auto& v : free_vars(renamed)) {
    bool bound = std::any_of(bindings.begin(), bindings.end(), [&](const auto& b) { return b.first == v; });
    if (!bound) throw Error(ErrorKind::UnboundVariable, "no binding for free variable '" + v + "'");
  }
  EnvShape shape = run_shape(renamed, bindings);
  CompiledUnit unit = compile(renamed, shape, options.builtins, options.rewrites);
  Value env = build_env(shape, bindings);
  Evaluator ev(*options.primitives, options.steps);
  Value out = ev.eval(unit.code, env);
  return RunResult{std::move(out), std::move(unit), std::move(env)};
}

}  // namespace objeval

#include "objeval/eval.hpp"

namespace objeval {

namespace {

std::int64_t int_arg(const Value& v, const char* prim) {
  if (v.kind() != Value::Kind::Int) {
    throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim(prim),
                    std::string(prim) + " expects an integer, got " + render(v));
  }
  return v.as_int();
}

bool bool_arg(const Value& v, const char* prim) {
  if (v.kind() != Value::Kind::Bool) {
    throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim(prim),
                    std::string(prim) + " expects a truth value, got " + render(v));
  }
  return v.as_bool();
}

const Value& pair_arg(const Value& v, const char* prim) {
  if (!v.is_pair()) {
    throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim(prim),
                    std::string(prim) + " expects a pair, got " + render(v));
  }
  return v;
}

template <typename Op>
Primitive bool_binary(const char* name, Op op) {
  return [name, op](const Value& v, Evaluator&) {
    const Value& p = pair_arg(v, name);
    bool a = bool_arg(p.first(), name);
    bool b = bool_arg(p.second(), name);
    return Value::boolean(op(a, b));
  };
}

PrimitiveTable make_standard() {
  PrimitiveTable t;
  t.define("+", [](const Value& v, Evaluator&) {
    const Value& p = pair_arg(v, "+");
    std::int64_t a = int_arg(p.first(), "+");
    std::int64_t b = int_arg(p.second(), "+");
    return Value::integer(a + b);
  });
  t.define("succ", [](const Value& v, Evaluator&) { return Value::integer(int_arg(v, "succ") + 1); });
  t.define("id", [](const Value& v, Evaluator&) { return v; });
  t.define("eq", [](const Value& v, Evaluator&) {
    const Value& p = pair_arg(v, "eq");
    return Value::boolean(p.first() == p.second());
  });
  t.define("mem", [](const Value& v, Evaluator&) {
    const Value& p = pair_arg(v, "mem");
    if (!p.second().is_set()) {
      throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim("mem"),
                      "mem expects a set on the right, got " + render(p.second()));
    }
    return Value::boolean(p.second().contains(p.first()));
  });
  t.define("not", [](const Value& v, Evaluator&) { return Value::boolean(!bool_arg(v, "not")); });
  t.define("and", bool_binary("and", [](bool a, bool b) { return a && b; }));
  t.define("or", bool_binary("or", [](bool a, bool b) { return a || b; }));
  t.define("implies", bool_binary("implies", [](bool a, bool b) { return !a || b; }));
  return t;
}

}  // namespace

void PrimitiveTable::define(std::string name, Primitive fn) { table_[std::move(name)] = std::move(fn); }

const Primitive* PrimitiveTable::find(std::string_view name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<std::string> PrimitiveTable::names() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : table_) out.push_back(k);
  return out;
}

const PrimitiveTable& standard_primitives() {
  static const PrimitiveTable t = make_standard();
  return t;
}

void define_quantifiers(PrimitiveTable& table, const TypeExpr& type, std::vector<Value> carrier) {
  auto shared = std::make_shared<const std::vector<Value>>(std::move(carrier));
  for (bool universal : {true, false}) {
    std::string name = std::string(universal ? "forall@" : "exists@") + render(type);
    table.define(name, [shared, universal, name](const Value& f, Evaluator& ev) {
      for (const Value& c : *shared) {
        Value r = ev.apply(f, c);
        if (r.kind() != Value::Kind::Bool) {
          throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim(name),
                          name + " body returned " + render(r));
        }
        if (r.as_bool() != universal) return Value::boolean(!universal);
      }
      return Value::boolean(universal);
    });
  }
}

void define_graph(PrimitiveTable& table, const std::string& name, Value graph) {
  table.define(name, [graph, name](const Value& v, Evaluator&) {
    auto r = graph.lookup(v);
    if (!r) {
      throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::prim(name),
                      name + " is not defined at " + render(v));
    }
    return *r;
  });
}

EvalError::EvalError(ErrorKind kind, CombTerm subterm, const std::string& message)
    : Error(kind, message + " (in " + render(subterm) + ")"), subterm_(std::move(subterm)) {}

Evaluator::Evaluator(const PrimitiveTable& prims, TraceSink trace) : prims_(prims), trace_(std::move(trace)) {}

Value Evaluator::eval(const CombTerm& code, const Value& input) {
  if (!trace_) return step(code, input);
  ++depth_;
  Value out;
  try {
    out = step(code, input);
  } catch (...) {
    --depth_;
    throw;
  }
  --depth_;
  trace_(std::string(2 * depth_, ' ') + render(code) + " ⊢ " + render(input) + " ⇒ " + render(out));
  return out;
}

Value Evaluator::project(const CombTerm& code, const Value& input, bool first) {
  if (!input.is_pair()) {
    throw EvalError(ErrorKind::ProjectionOnNonPair, code, render(code) + " applied to " + render(input));
  }
  const Value& out = first ? input.first() : input.second();
  if (out.kind() == Value::Kind::Placeholder) {
    throw EvalError(ErrorKind::PlaceholderRead, code, "read of an unfilled slot in " + render(input));
  }
  return out;
}

Value Evaluator::step(const CombTerm& code, const Value& input) {
  using K = CombTerm::Kind;
  switch (code.kind()) {
    case K::Id: return input;
    case K::Fst: return project(code, input, true);
    case K::Snd: return project(code, input, false);
    case K::Comp: {
      Value mid = eval(code.inner(), input);
      return eval(code.outer(), mid);
    }
    case K::Pair: {
      Value l = eval(code.left(), input);
      Value r = eval(code.right(), input);
      return Value::pair(std::move(l), std::move(r));
    }
    case K::Cur: return Value::closure(code.body(), input);
    case K::Eps:
      if (!input.is_pair()) {
        throw EvalError(ErrorKind::ApplyOnNonFunction, code, "Eps needs a pair, got " + render(input));
      }
      return apply(input.first(), input.second());
    case K::Const: return code.value();
    case K::Can: return input;
    case K::Prim: {
      const Primitive* p = prims_.find(code.name());
      if (!p) throw EvalError(ErrorKind::UnknownPrimitive, code, "no primitive named '" + code.name() + "'");
      return (*p)(input, *this);
    }
  }
  throw EvalError(ErrorKind::Usage, code, "unhandled combinator");
}

Value Evaluator::apply(const Value& fun, const Value& arg) {
  switch (fun.kind()) {
    case Value::Kind::Closure: return eval(fun.closure_body(), Value::pair(fun.closure_env(), arg));
    case Value::Kind::Fun: {
      auto r = fun.lookup(arg);
      if (!r) {
        throw EvalError(ErrorKind::PrimitiveDomain, CombTerm::eps(),
                        render(fun) + " is not defined at " + render(arg));
      }
      return *r;
    }
    default:
      throw EvalError(ErrorKind::ApplyOnNonFunction, CombTerm::eps(),
                      "cannot apply " + render(fun) + " to " + render(arg));
  }
}

Value eval(const CombTerm& code, const Value& input, const PrimitiveTable& prims) {
  Evaluator ev(prims);
  return ev.eval(code, input);
}

Value apply(const Value& fun, const Value& arg, const PrimitiveTable& prims) {
  Evaluator ev(prims);
  return ev.apply(fun, arg);
}

}  // namespace objeval

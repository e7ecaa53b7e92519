#include <memory>
#include <set>

#include "objeval/error.hpp"
#include "objeval/pipeline.hpp"

namespace objeval {

namespace {

// Terms of the substitution calculus. Ground values are embedded as Val
// nodes; closed abstractions, builtins, ground values and pairs of values
// are the normal forms.
struct Node;
using Term = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Var, Val, Builtin, App, Abs, Pair } kind;
  std::string name;
  Value value;
  Term a, b;
};

Term mk(Node::Kind k, std::string name = {}, Value v = {}, Term a = nullptr, Term b = nullptr) {
  return std::make_shared<const Node>(Node{k, std::move(name), std::move(v), std::move(a), std::move(b)});
}

// A literal builtin:<g> is the closure Cur(g . Snd) over ().
std::optional<std::string> builtin_of_closure(const Value& v) {
  if (v.kind() != Value::Kind::Closure || v.closure_env().kind() != Value::Kind::Unit) return std::nullopt;
  const CombTerm& c = v.closure_body();
  if (c.kind() != CombTerm::Kind::Comp || c.inner().kind() != CombTerm::Kind::Snd) return std::nullopt;
  if (c.outer().kind() == CombTerm::Kind::Prim) return c.outer().name();
  if (c.outer().kind() == CombTerm::Kind::Can) return "can_" + render(c.outer().type());
  return std::nullopt;
}

Term embed(const Value& v) {
  if (auto g = builtin_of_closure(v)) return mk(Node::Kind::Builtin, *g);
  if (v.kind() == Value::Kind::Closure) {
    throw Error(ErrorKind::Usage, "the oracle cannot take compiled closures as input: " + render(v));
  }
  return mk(Node::Kind::Val, {}, v);
}

Term convert(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var: return mk(Node::Kind::Var, t.name());
    case LambdaTerm::Kind::Const: return mk(Node::Kind::Val, {}, t.literal());
    case LambdaTerm::Kind::Builtin: return mk(Node::Kind::Builtin, t.name());
    case LambdaTerm::Kind::App: return mk(Node::Kind::App, {}, {}, convert(t.fun()), convert(t.arg()));
    case LambdaTerm::Kind::Abs: return mk(Node::Kind::Abs, t.name(), {}, convert(t.body()));
    case LambdaTerm::Kind::Pair: return mk(Node::Kind::Pair, {}, {}, convert(t.left()), convert(t.right()));
  }
  return nullptr;
}

void free_in(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Node::Kind::Var:
      if (bound.count(t->name) == 0) out.insert(t->name);
      return;
    case Node::Kind::Abs: {
      bool fresh = bound.insert(t->name).second;
      free_in(t->a, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case Node::Kind::App:
    case Node::Kind::Pair:
      free_in(t->a, bound, out);
      free_in(t->b, bound, out);
      return;
    default: return;
  }
}

std::set<std::string> free_names(const Term& t) {
  std::set<std::string> bound, out;
  free_in(t, bound, out);
  return out;
}

class Oracle {
 public:
  // t[x := s]
  Term subst(const Term& t, const std::string& x, const Term& s, const std::set<std::string>& s_free) {
    switch (t->kind) {
      case Node::Kind::Var: return t->name == x ? s : t;
      case Node::Kind::Val:
      case Node::Kind::Builtin: return t;
      case Node::Kind::App:
      case Node::Kind::Pair:
        return mk(t->kind, {}, {}, subst(t->a, x, s, s_free), subst(t->b, x, s, s_free));
      case Node::Kind::Abs: {
        if (t->name == x) return t;
        if (s_free.count(t->name) == 0) return mk(Node::Kind::Abs, t->name, {}, subst(t->a, x, s, s_free));
        std::set<std::string> avoid = free_names(t->a);
        avoid.insert(s_free.begin(), s_free.end());
        avoid.insert(x);
        std::string fresh = t->name;
        for (int k = 1; avoid.count(fresh) != 0; ++k) fresh = t->name + "_" + std::to_string(k);
        Term body = subst(t->a, t->name, mk(Node::Kind::Var, fresh), {fresh});
        return mk(Node::Kind::Abs, fresh, {}, subst(body, x, s, s_free));
      }
    }
    return t;
  }

  Term eval(const Term& t) {
    switch (t->kind) {
      case Node::Kind::Var:
        throw Error(ErrorKind::UnboundVariable, "no binding for free variable '" + t->name + "'");
      case Node::Kind::Val:
      case Node::Kind::Builtin:
      case Node::Kind::Abs: return t;
      case Node::Kind::Pair: {
        Term l = eval(t->a);
        Term r = eval(t->b);
        return mk(Node::Kind::Pair, {}, {}, l, r);
      }
      case Node::Kind::App: {
        Term f = eval(t->a);
        Term x = eval(t->b);
        return call(f, x);
      }
    }
    return t;
  }

  Value ground(const Term& t) {
    switch (t->kind) {
      case Node::Kind::Val: return t->value;
      case Node::Kind::Pair: return Value::pair(ground(t->a), ground(t->b));
      case Node::Kind::Builtin:
        return Value::closure(CombTerm::compose(builtin_arrow(t->name), CombTerm::snd()), Value::unit());
      default: throw Error(ErrorKind::Usage, "the oracle result is an abstraction and has no ground form");
    }
  }

 private:
  Term call(const Term& f, const Term& x) {
    switch (f->kind) {
      case Node::Kind::Abs: return eval(subst(f->a, f->name, x, free_names(x)));
      case Node::Kind::Builtin: return builtin(f->name, x);
      case Node::Kind::Val:
        if (f->value.kind() == Value::Kind::Fun) {
          if (auto r = f->value.lookup(ground(x))) return mk(Node::Kind::Val, {}, *r);
          throw Error(ErrorKind::PrimitiveDomain, render(f->value) + " is not defined at " + render(ground(x)));
        }
        [[fallthrough]];
      default: throw Error(ErrorKind::ApplyOnNonFunction, "cannot apply a non-function value");
    }
  }

  static std::int64_t number(const Term& t, const std::string& g) {
    if (t->kind != Node::Kind::Val || t->value.kind() != Value::Kind::Int) {
      throw Error(ErrorKind::PrimitiveDomain, g + " expects an integer");
    }
    return t->value.as_int();
  }

  Term builtin(const std::string& g, const Term& x) {
    if (g == "id" || g.rfind("can_", 0) == 0) return x;
    if (g == "succ") return mk(Node::Kind::Val, {}, Value::integer(number(x, g) + 1));
    if (g == "+") {
      if (x->kind == Node::Kind::Val && x->value.is_pair()) {
        return builtin(g, mk(Node::Kind::Pair, {}, {}, embed(x->value.first()), embed(x->value.second())));
      }
      if (x->kind != Node::Kind::Pair) throw Error(ErrorKind::PrimitiveDomain, "+ expects a pair");
      return mk(Node::Kind::Val, {}, Value::integer(number(x->a, g) + number(x->b, g)));
    }
    throw Error(ErrorKind::UnknownBuiltin, "the oracle has no builtin '" + g + "'");
  }
};

}  // namespace

Value oracle_eval(const LambdaTerm& term, const Bindings& bindings) {
  Oracle o;
  Term t = convert(term);
  // Bindings are closed, so substituting them one after another is the same
  // as a simultaneous substitution.
  for (const auto& [name, v] : bindings) {
    Term s = embed(v);
    t = o.subst(t, name, s, {});
  }
  return o.ground(o.eval(t));
}

}  // namespace objeval

#include "objeval/compiler.hpp"

#include <algorithm>
#include <cctype>

#include "objeval/error.hpp"
#include "objeval/normalize.hpp"

namespace objeval {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

const TypeExpr& nat() {
  static const TypeExpr t = TypeExpr::base("nat");
  return t;
}

// Structural equality where the unknown type matches anything.
bool compatible(const TypeExpr& a, const TypeExpr& b) {
  if (a.is_unknown() || b.is_unknown()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeExpr::Kind::Base: return a.name() == b.name();
    case TypeExpr::Kind::Unit:
    case TypeExpr::Kind::Truth: return true;
    case TypeExpr::Kind::Power: return compatible(a.left(), b.left());
    case TypeExpr::Kind::Prod:
    case TypeExpr::Kind::Arrow: return compatible(a.left(), b.left()) && compatible(a.right(), b.right());
  }
  return false;
}

TypeExpr result_of_application(const LambdaTerm& app, const TypeExpr& fun, const TypeExpr& arg) {
  if (fun.is_unknown()) return TypeExpr::unknown();
  if (fun.kind() == TypeExpr::Kind::Arrow) {
    if (!compatible(fun.left(), arg)) {
      throw Error(ErrorKind::UntypableApplication,
                  render(app) + ": argument of type " + render(arg) + " given to " + render(fun));
    }
    return fun.right();
  }
  // An opaque domain D applied to something yields the codomain D'.
  if (fun.kind() == TypeExpr::Kind::Base && fun.name() != "nat" && fun.name() != "atom") {
    return TypeExpr::base(fun.name() + "'");
  }
  throw Error(ErrorKind::UntypableApplication,
              render(app) + ": head has non-function type " + render(fun));
}

struct Piece {
  CombTerm code;
  TypeExpr type;
};

class Compiler {
 public:
  explicit Compiler(const BuiltinSet& known) : known_(known) {}

  Piece term(const LambdaTerm& t, const EnvShape& shape) {
    switch (t.kind()) {
      case LambdaTerm::Kind::Var: {
        auto idx = shape.index_of(t.name());
        if (!idx) throw Error(ErrorKind::UnknownVariable, "variable '" + t.name() + "' is not in shape " + render(shape));
        return {access(t.name(), shape), shape.slots[*idx].type};
      }
      case LambdaTerm::Kind::Const: {
        TypeExpr ty = value_type(t.literal());
        return {CombTerm::compose(CombTerm::can(ty), CombTerm::constant(t.literal())), ty};
      }
      case LambdaTerm::Kind::Builtin: {
        TypeExpr ty = builtin_type(t.name());
        TypeExpr arg = ty.kind() == TypeExpr::Kind::Arrow ? ty.left() : TypeExpr::unknown();
        return {compile_builtin_app(t.name(), arg, known_), ty};
      }
      case LambdaTerm::Kind::App: {
        Piece f = term(t.fun(), shape);
        Piece a = term(t.arg(), shape);
        TypeExpr ty = result_of_application(t, f.type, a.type);
        return {CombTerm::compose(CombTerm::eps(), CombTerm::pair(f.code, a.code)), ty};
      }
      case LambdaTerm::Kind::Pair: {
        Piece l = term(t.left(), shape);
        Piece r = term(t.right(), shape);
        return {CombTerm::pair(l.code, r.code), TypeExpr::prod(l.type, r.type)};
      }
      case LambdaTerm::Kind::Abs: return abstraction(t, shape);
    }
    throw Error(ErrorKind::Usage, "unhandled term");
  }

 private:
  Piece abstraction(const LambdaTerm& t, const EnvShape& shape) {
    const std::string& x = t.name();
    auto idx = shape.index_of(x);
    if (!idx) {
      EnvShape wider = shape.with(Slot{x, TypeExpr::unknown()});
      Piece inner = abstraction(t, wider);
      CombTerm fill = CombTerm::pair(CombTerm::id(), CombTerm::constant(Value::placeholder()));
      return {CombTerm::compose(inner.code, fill), inner.type};
    }
    if (*idx + 1 != shape.slots.size()) {
      EnvShape cut = shape.prefix(*idx + 1);
      for (const auto& v : free_vars(t)) {
        if (!cut.contains(v)) {
          throw Error(ErrorKind::ShapeMismatch,
                      "abstraction over '" + x + "' refers to '" + v + "', which lies after '" + x +
                          "' in shape " + render(shape));
        }
      }
      Piece inner = abstraction(t, cut);
      return {CombTerm::compose(inner.code, fst_power(shape.slots.size() - cut.slots.size())), inner.type};
    }
    Piece body = term(t.body(), shape);
    return {CombTerm::cur(CombTerm::compose(body.code, subst_map(shape, x))),
            TypeExpr::arrow(shape.slots.back().type, body.type)};
  }

  const BuiltinSet& known_;
};

CombTerm eq_of(const CombTerm& a, const CombTerm& b) {
  return comp(CombTerm::prim("eq"), CombTerm::pair(a, b));
}

}  // namespace

std::optional<std::size_t> EnvShape::index_of(std::string_view name) const {
  for (std::size_t i = slots.size(); i-- > 0;) {
    if (slots[i].name == name) return i;
  }
  return std::nullopt;
}

EnvShape EnvShape::with(Slot slot) const {
  EnvShape s = *this;
  s.slots.push_back(std::move(slot));
  return s;
}

EnvShape EnvShape::prefix(std::size_t n) const {
  EnvShape s = *this;
  s.slots.resize(std::min(n, s.slots.size()));
  return s;
}

EnvShape parse_shape(std::string_view text) {
  EnvShape shape;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = trim(text.substr(start, end - start));
    if (!piece.empty()) {
      std::size_t colon = piece.find(':');
      if (colon == std::string_view::npos && first) {
        if (!is_identifier(piece)) throw SyntaxError(start, "invalid base name '" + std::string(piece) + "'");
        shape.base = std::string(piece);
      } else {
        std::string_view name = trim(piece.substr(0, colon));
        if (!is_identifier(name)) throw SyntaxError(start, "invalid slot name '" + std::string(name) + "'");
        TypeExpr ty = TypeExpr::unknown();
        if (colon != std::string_view::npos) {
          try {
            ty = parse_type(piece.substr(colon + 1));
          } catch (const SyntaxError& e) {
            throw SyntaxError(start + colon + 1 + e.position(), e.detail());
          }
        }
        for (const auto& s : shape.slots) {
          if (s.name == name) throw SyntaxError(start, "duplicate slot '" + std::string(name) + "'");
        }
        shape.slots.push_back(Slot{std::string(name), ty});
      }
      first = false;
    }
    start = end + 1;
  }
  return shape;
}

std::string render(const EnvShape& shape) {
  std::string out = shape.base;
  for (const auto& s : shape.slots) {
    out += "; " + s.name;
    if (!s.type.is_unknown()) out += ":" + render(s.type);
  }
  return out;
}

CombTerm access(std::string_view name, const EnvShape& shape) {
  auto idx = shape.index_of(name);
  if (!idx) {
    throw Error(ErrorKind::UnknownVariable, "variable '" + std::string(name) + "' is not in shape " + render(shape));
  }
  return comp(CombTerm::snd(), fst_power(shape.slots.size() - 1 - *idx));
}

CombTerm subst_map(const EnvShape& shape, std::string_view name) {
  if (shape.slots.empty() || shape.slots.back().name != name) {
    throw Error(ErrorKind::NotOutermost, "'" + std::string(name) + "' is not the last slot of " + render(shape));
  }
  return CombTerm::pair(comp(CombTerm::fst(), CombTerm::fst()), CombTerm::snd());
}

CombTerm compile_builtin_app(const std::string& g, const TypeExpr& arg_ty, const BuiltinSet& known) {
  bool is_can = g.rfind("can_", 0) == 0 && g.size() > 4;
  if (!is_can && known.count(g) == 0) throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + g + "'");
  if (is_can && !compatible(TypeExpr::base(g.substr(4)), arg_ty)) {
    throw Error(ErrorKind::UntypableApplication, g + " applied at type " + render(arg_ty));
  }
  return CombTerm::cur(comp(builtin_arrow(g), CombTerm::snd()));
}

TypeExpr builtin_type(const std::string& g) {
  if (g == "succ") return TypeExpr::arrow(nat(), nat());
  if (g == "+") return TypeExpr::arrow(TypeExpr::prod(nat(), nat()), nat());
  if (g.rfind("can_", 0) == 0 && g.size() > 4) {
    TypeExpr t = TypeExpr::base(g.substr(4));
    return TypeExpr::arrow(t, t);
  }
  return TypeExpr::arrow(TypeExpr::unknown(), TypeExpr::unknown());
}

TypeExpr value_type(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int: return nat();
    case Value::Kind::Name: return TypeExpr::base("atom");
    case Value::Kind::Pair: return TypeExpr::prod(value_type(v.first()), value_type(v.second()));
    case Value::Kind::Bool: return TypeExpr::truth();
    case Value::Kind::Unit: return TypeExpr::unit();
    case Value::Kind::Set:
      return TypeExpr::power(v.elements().empty() ? TypeExpr::unknown() : value_type(v.elements().front()));
    case Value::Kind::Closure:
    case Value::Kind::Fun: return TypeExpr::arrow(TypeExpr::unknown(), TypeExpr::unknown());
    case Value::Kind::Placeholder: return TypeExpr::unknown();
  }
  return TypeExpr::unknown();
}

CompiledUnit compile(const LambdaTerm& term, const EnvShape& shape, const BuiltinSet& known,
                     const TraceSink& rewrites) {
  Compiler c(known);
  Piece p = c.term(term, shape);
  return CompiledUnit{normalize(p.code, rewrites), p.code, shape, p.type};
}

std::string quantifier_primitive(bool universal, const TypeExpr& type) {
  return std::string(universal ? "forall@" : "exists@") + render(type);
}

CombTerm formula_code(const Formula& phi, const EnvShape& shape) {
  using K = Formula::Kind;
  const auto& n = phi.names();
  auto acc = [&](const std::string& v) { return access(v, shape); };
  switch (phi.kind()) {
    case K::EqVar: return eq_of(acc(n[0]), acc(n[1]));
    case K::EqConst: return eq_of(acc(n[0]), CombTerm::constant(phi.literal()));
    case K::EqCFun: return eq_of(acc(n[0]), comp(builtin_arrow(n[1]), acc(n[2])));
    case K::EqPair: return eq_of(acc(n[0]), CombTerm::pair(acc(n[1]), acc(n[2])));
    case K::EqApp:
      return eq_of(acc(n[0]), comp(CombTerm::eps(), CombTerm::pair(acc(n[1]), acc(n[2]))));
    case K::Mem: return comp(CombTerm::prim("mem"), CombTerm::pair(acc(n[0]), acc(n[1])));
    case K::True: return CombTerm::constant(Value::boolean(true));
    case K::False: return CombTerm::constant(Value::boolean(false));
    case K::Not: return comp(CombTerm::prim("not"), formula_code(phi.lhs(), shape));
    case K::And:
    case K::Or:
    case K::Implies: {
      const char* op = phi.kind() == K::And ? "and" : phi.kind() == K::Or ? "or" : "implies";
      return comp(CombTerm::prim(op),
                  CombTerm::pair(formula_code(phi.lhs(), shape), formula_code(phi.rhs(), shape)));
    }
    case K::Forall:
    case K::Exists: {
      EnvShape inner = shape.with(Slot{n[0], phi.type()});
      return comp(CombTerm::prim(quantifier_primitive(phi.kind() == K::Forall, phi.type())),
                  CombTerm::cur(formula_code(phi.lhs(), inner)));
    }
  }
  throw Error(ErrorKind::Usage, "unhandled formula");
}

CompiledUnit compile_formula(const Formula& phi, const EnvShape& shape, std::string_view subject,
                             const TraceSink& rewrites) {
  CombTerm subst = subst_map(shape, subject);
  CombTerm body = formula_code(phi, shape);
  CombTerm raw = CombTerm::compose(
      CombTerm::eps(),
      CombTerm::pair(CombTerm::compose(CombTerm::cur(CombTerm::compose(body, subst)), CombTerm::fst()),
                     CombTerm::snd()));
  return CompiledUnit{normalize(raw, rewrites), raw, shape, TypeExpr::truth()};
}

}  // namespace objeval

#include "objeval/logic.hpp"

#include <algorithm>
#include <set>

#include "objeval/error.hpp"

namespace objeval {

namespace {

// Evaluates formulas at a stage given by name and size, so that the
// one-element stages {i} need not be part of the model.
class StageEval {
 public:
  StageEval(const Model& model, std::string stage, std::size_t size)
      : model_(model), stage_(std::move(stage)), size_(size) {}

  bool holds(const Formula& phi, const Valuation& nu) const {
    using K = Formula::Kind;
    switch (phi.kind()) {
      case K::True: return true;
      case K::False: return false;
      case K::Not: return !holds(phi.lhs(), nu);
      case K::And: return holds(phi.lhs(), nu) && holds(phi.rhs(), nu);
      case K::Or: return holds(phi.lhs(), nu) || holds(phi.rhs(), nu);
      case K::Implies: return !holds(phi.lhs(), nu) || holds(phi.rhs(), nu);
      case K::Forall:
      case K::Exists: {
        bool universal = phi.kind() == K::Forall;
        Valuation inner = nu;
        for (auto& t : functions(phi.type())) {
          inner.insert_or_assign(phi.names()[0], std::move(t));
          if (holds(phi.lhs(), inner) != universal) return !universal;
        }
        return universal;
      }
      default:
        for (std::size_t i = 0; i < size_; ++i) {
          if (!atomic_at(phi, nu, i)) return false;
        }
        return true;
    }
  }

 private:
  std::vector<Individual> functions(const TypeExpr& type) const {
    auto car = model_.carrier(type);
    std::size_t total = 1;
    for (std::size_t i = 0; i < size_; ++i) {
      if (!car.empty() && total > model_.cap / car.size()) {
        throw Error(ErrorKind::EnumerationCapExceeded, "quantifier over " + render(type) + " exceeds the cap");
      }
      total *= car.size();
    }
    std::vector<Individual> out;
    if (car.empty() && size_ > 0) return out;
    std::vector<std::size_t> d(size_, 0);
    while (true) {
      Individual h{stage_, type, {}};
      for (auto k : d) h.values.push_back(car[k]);
      out.push_back(std::move(h));
      std::size_t k = size_;
      while (k > 0 && ++d[k - 1] == car.size()) d[--k] = 0;
      if (k == 0) break;
    }
    return out;
  }

  const Value& value(const Valuation& nu, const std::string& v, std::size_t i) const {
    auto it = nu.find(v);
    if (it == nu.end()) throw Error(ErrorKind::UnboundVariable, "no individual for '" + v + "'");
    if (it->second.stage != stage_ || it->second.values.size() != size_) {
      throw Error(ErrorKind::StageMismatch, "'" + v + "' lives on " + it->second.stage + ", not on " + stage_);
    }
    return it->second.values[i];
  }

  Value call(const std::string& g, const Value& x) const {
    auto it = model_.car.transitions.find(g);
    if (it != model_.car.transitions.end()) {
      auto r = it->second.map.find(x);
      if (r == it->second.map.end()) throw Error(ErrorKind::TypeMismatch, g + " is not defined at " + render(x));
      return r->second;
    }
    if (g.rfind("can_", 0) == 0) return x;
    if (standard_primitives().contains(g)) return objeval::eval(CombTerm::prim(g), x);
    throw Error(ErrorKind::UnknownBuiltin, "no transition or builtin named '" + g + "'");
  }

  bool atomic_at(const Formula& phi, const Valuation& nu, std::size_t i) const {
    using K = Formula::Kind;
    const auto& n = phi.names();
    switch (phi.kind()) {
      case K::EqVar: return value(nu, n[0], i) == value(nu, n[1], i);
      case K::EqConst: return value(nu, n[0], i) == phi.literal();
      case K::EqCFun: return value(nu, n[0], i) == call(n[1], value(nu, n[2], i));
      case K::EqPair: return value(nu, n[0], i) == Value::pair(value(nu, n[1], i), value(nu, n[2], i));
      case K::EqApp: {
        const Value& f = value(nu, n[1], i);
        if (f.kind() != Value::Kind::Fun) throw Error(ErrorKind::TypeMismatch, "'" + n[1] + "' is not a function");
        auto r = f.lookup(value(nu, n[2], i));
        if (!r) throw Error(ErrorKind::TypeMismatch, "'" + n[1] + "' is not defined at the value of '" + n[2] + "'");
        return value(nu, n[0], i) == *r;
      }
      case K::Mem: {
        const Value& s = value(nu, n[1], i);
        if (!s.is_set()) throw Error(ErrorKind::TypeMismatch, "'" + n[1] + "' is not a set");
        return s.contains(value(nu, n[0], i));
      }
      default: throw Error(ErrorKind::Usage, "not an atomic formula");
    }
  }

  const Model& model_;
  std::string stage_;
  std::size_t size_;
};

void collect_quantified(const Formula& phi, std::vector<TypeExpr>& out) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::Forall:
    case K::Exists:
      if (std::find(out.begin(), out.end(), phi.type()) == out.end()) out.push_back(phi.type());
      collect_quantified(phi.lhs(), out);
      return;
    case K::Not: collect_quantified(phi.lhs(), out); return;
    case K::And:
    case K::Or:
    case K::Implies:
      collect_quantified(phi.lhs(), out);
      collect_quantified(phi.rhs(), out);
      return;
    default: return;
  }
}

std::string point_stage(std::string_view stage, const std::string& element) {
  return std::string(stage) + "{" + element + "}";
}

Individual point_of(const Individual& h, const std::string& stage, std::size_t i) {
  return Individual{stage, h.type, {h.values[i]}};
}

Extent finish(std::string_view stage, const TypeExpr& type, const Model& model,
              std::vector<std::vector<Value>> sets) {
  Extent e;
  e.relation = Relation{std::string(stage), type, {}};
  const auto& elems = model.cat.elements(stage);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& t : sets[i]) e.relation.pairs.emplace(elems[i], t);
  }
  e.function = rel_to_func(e.relation, model);
  e.sets = std::move(sets);
  return e;
}

}  // namespace

bool eval_formula(const Formula& phi, std::string_view stage, const Valuation& nu, const Model& model) {
  StageEval ev(model, std::string(stage), model.cat.elements(stage).size());
  return ev.holds(phi, nu);
}

std::vector<Individual> concept_at(const Formula& phi, const std::string& y, const TypeExpr& type,
                                   std::string_view stage, const Model& model, const Valuation& context) {
  StageEval ev(model, std::string(stage), model.cat.elements(stage).size());
  std::vector<Individual> out;
  Valuation nu = context;
  for (auto& t : hom(model, stage, type)) {
    nu.insert_or_assign(y, t);
    if (ev.holds(phi, nu)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Individual> concept_along(const Formula& phi, const std::string& y, const TypeExpr& type,
                                      const StageArrow& f, const Model& model) {
  std::set<Individual> image;
  for (const auto& s : concept_at(phi, y, type, f.cod, model)) image.insert(restrict(s, f, model));
  return {image.begin(), image.end()};
}

Value describe(const Formula& phi, const std::string& x, const std::vector<Value>& carrier, const Model& model,
               const std::map<std::string, Value, std::less<>>& context) {
  const std::string stage = "{*}";
  StageEval ev(model, stage, 1);
  Valuation nu;
  for (const auto& [name, v] : context) nu.insert_or_assign(name, Individual{stage, value_type(v), {v}});
  std::vector<Value> witnesses;
  for (const auto& d : carrier) {
    nu.insert_or_assign(x, Individual{stage, value_type(d), {d}});
    if (ev.holds(phi, nu)) witnesses.push_back(d);
  }
  if (witnesses.empty()) throw Error(ErrorKind::NoWitness, "no element satisfies " + render(phi));
  if (witnesses.size() > 1) {
    std::string list;
    for (std::size_t i = 0; i < witnesses.size() && i < 5; ++i) list += (i ? ", " : "") + render(witnesses[i]);
    if (witnesses.size() > 5) list += ", ...";
    throw Error(ErrorKind::NotUnique, std::to_string(witnesses.size()) + " elements satisfy " + render(phi) + ": " + list);
  }
  return witnesses.front();
}

std::vector<TypeExpr> quantified_types(const Formula& phi) {
  std::vector<TypeExpr> out;
  collect_quantified(phi, out);
  return out;
}

Extent concept_extent_via_code(const Formula& phi, const std::string& x, std::string_view stage,
                               const TypeExpr& type, const Model& model, const Valuation& ambient) {
  EnvShape shape;
  shape.base = "I";
  for (const auto& [name, h] : ambient) shape.slots.push_back(Slot{name, h.type});
  shape.slots.push_back(Slot{x, type});
  CompiledUnit unit = compile_formula(phi, shape, x);
  PrimitiveTable prims = model.primitives(quantified_types(phi));
  Evaluator ev(prims);

  const auto& elems = model.cat.elements(stage);
  auto car = model.carrier(type);
  std::vector<std::vector<Value>> sets(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Value env = Value::unit();
    for (const auto& [name, h] : ambient) {
      if (h.stage != stage) throw Error(ErrorKind::StageMismatch, "'" + name + "' lives on " + h.stage);
      env = Value::pair(env, h.values[i]);
    }
    env = Value::pair(env, Value::placeholder());
    for (const auto& t : car) {
      Value r = ev.eval(unit.code, Value::pair(env, t));
      if (r.kind() != Value::Kind::Bool) {
        throw Error(ErrorKind::TypeMismatch, "formula code returned " + render(r));
      }
      if (r.as_bool()) sets[i].push_back(t);
    }
  }
  return finish(stage, type, model, std::move(sets));
}

Extent concept_extent_via_formula(const Formula& phi, const std::string& x, std::string_view stage,
                                  const TypeExpr& type, const Model& model, const Valuation& ambient) {
  const auto& elems = model.cat.elements(stage);
  auto car = model.carrier(type);
  std::vector<std::vector<Value>> sets(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string point = point_stage(stage, elems[i]);
    StageEval ev(model, point, 1);
    Valuation nu;
    for (const auto& [name, h] : ambient) {
      if (h.stage != stage) throw Error(ErrorKind::StageMismatch, "'" + name + "' lives on " + h.stage);
      nu.insert_or_assign(name, point_of(h, point, i));
    }
    for (const auto& t : car) {
      nu.insert_or_assign(x, Individual{point, type, {t}});
      if (ev.holds(phi, nu)) sets[i].push_back(t);
    }
  }
  return finish(stage, type, model, std::move(sets));
}

}  // namespace objeval

#include "objeval/domain.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>

#include "objeval/error.hpp"
#include "objeval/parser.hpp"

namespace objeval {

namespace {

using json = nlohmann::json;

[[noreturn]] void model_error(const std::string& msg) { throw Error(ErrorKind::Model, msg); }

// base^exp, or EnumerationCapExceeded when it passes cap.
std::size_t bounded_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && n > cap / base) {
      throw Error(ErrorKind::EnumerationCapExceeded,
                  what + ": " + std::to_string(base) + "^" + std::to_string(exp) + " candidates exceed the cap of " +
                      std::to_string(cap));
    }
    n *= base;
  }
  if (n > cap) {
    throw Error(ErrorKind::EnumerationCapExceeded, what + ": " + std::to_string(n) + " candidates exceed the cap");
  }
  return n;
}

// Calls visit(digits) for every word of length len over 0..base-1, in
// lexicographic order with the first position most significant.
template <typename F>
void odometer(std::size_t base, std::size_t len, F&& visit) {
  std::vector<std::size_t> digits(len, 0);
  if (len > 0 && base == 0) return;
  while (true) {
    visit(digits);
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++digits[k] < base) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

Value element_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_literal(j.get<std::string>());
    } catch (const SyntaxError& e) {
      model_error(where + ": bad element '" + j.get<std::string>() + "': " + e.detail());
    }
  }
  model_error(where + ": elements must be strings or integers");
}

std::string stage_element_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  model_error(where + ": stage elements must be strings");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) model_error(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_member(const json& obj, const char* key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) model_error(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::string render_values(const Model& model, const Individual& h) {
  const auto& elems = model.cat.elements(h.stage);
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += elems[i] + " -> " + render(h.values[i]);
  }
  return out + "}";
}

}  // namespace

std::size_t default_enum_cap() {
  if (const char* env = std::getenv("OBJEVAL_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

const std::vector<std::string>& StageCat::elements(std::string_view stage) const {
  auto it = stages.find(std::string(stage));
  if (it == stages.end()) throw Error(ErrorKind::StageMismatch, "unknown stage '" + std::string(stage) + "'");
  return it->second;
}

std::size_t StageCat::index_of(std::string_view stage, std::string_view element) const {
  const auto& elems = elements(stage);
  auto it = std::find(elems.begin(), elems.end(), element);
  if (it == elems.end()) {
    throw Error(ErrorKind::ElementNotInStage,
                "'" + std::string(element) + "' is not an element of stage " + std::string(stage));
  }
  return static_cast<std::size_t>(it - elems.begin());
}

StageArrow StageCat::identity(std::string_view stage) const {
  StageArrow a{"1_" + std::string(stage), std::string(stage), std::string(stage), {}};
  for (const auto& e : elements(stage)) a.map[e] = e;
  return a;
}

StageArrow StageCat::arrow(std::string_view name) const {
  auto it = arrows.find(std::string(name));
  if (it != arrows.end()) return it->second;
  if (name.substr(0, 2) == "1_" && stages.count(std::string(name.substr(2))) != 0) return identity(name.substr(2));
  throw Error(ErrorKind::StageMismatch, "unknown arrow '" + std::string(name) + "'");
}

StageArrow compose(const StageArrow& f, const StageArrow& g) {
  if (g.cod != f.dom) {
    throw Error(ErrorKind::StageMismatch,
                "cannot compose " + f.name + " : " + f.dom + " -> " + f.cod + " after " + g.name + " : " + g.dom +
                    " -> " + g.cod);
  }
  StageArrow c{f.name + " . " + g.name, g.dom, f.cod, {}};
  for (const auto& [b, a] : g.map) c.map[b] = f.map.at(a);
  return c;
}

std::vector<Value> Model::carrier(const TypeExpr& type) const {
  switch (type.kind()) {
    case TypeExpr::Kind::Base: {
      auto it = car.types.find(type.name());
      if (it == car.types.end()) throw Error(ErrorKind::TypeMismatch, "unknown type '" + type.name() + "'");
      return it->second;
    }
    case TypeExpr::Kind::Unit: return {Value::unit()};
    case TypeExpr::Kind::Truth: return {Value::boolean(false), Value::boolean(true)};
    case TypeExpr::Kind::Prod: {
      auto l = carrier(type.left());
      auto r = carrier(type.right());
      if (!l.empty() && r.size() > cap / l.size()) {
        throw Error(ErrorKind::EnumerationCapExceeded, "carrier of " + render(type) + " exceeds the cap");
      }
      std::vector<Value> out;
      out.reserve(l.size() * r.size());
      for (const auto& a : l) {
        for (const auto& b : r) out.push_back(Value::pair(a, b));
      }
      return out;
    }
    case TypeExpr::Kind::Arrow: {
      auto dom = carrier(type.left());
      auto cod = carrier(type.right());
      bounded_power(cod.size(), dom.size(), cap, "carrier of " + render(type));
      std::vector<Value> out;
      odometer(cod.size(), dom.size(), [&](const std::vector<std::size_t>& d) {
        std::vector<std::pair<Value, Value>> graph;
        for (std::size_t i = 0; i < dom.size(); ++i) graph.emplace_back(dom[i], cod[d[i]]);
        out.push_back(Value::fun(std::move(graph)));
      });
      return out;
    }
    case TypeExpr::Kind::Power: {
      auto elems = carrier(type.left());
      std::size_t n = bounded_power(2, elems.size(), cap, "carrier of " + render(type));
      std::vector<Value> out;
      out.reserve(n);
      for (std::size_t mask = 0; mask < n; ++mask) {
        std::vector<Value> subset;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (mask & (std::size_t{1} << i)) subset.push_back(elems[i]);
        }
        out.push_back(Value::set(std::move(subset)));
      }
      return out;
    }
  }
  return {};
}

PrimitiveTable Model::primitives(const std::vector<TypeExpr>& quantified) const {
  PrimitiveTable table = standard_primitives();
  for (const auto& [name, t] : car.transitions) {
    std::vector<std::pair<Value, Value>> graph(t.map.begin(), t.map.end());
    define_graph(table, name, Value::fun(std::move(graph)));
  }
  for (const auto& ty : quantified) define_quantifiers(table, ty, carrier(ty));
  return table;
}

Model parse_model(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    model_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) model_error("model must be a JSON object");
  Model m;
  if (j.contains("stages")) {
    for (const auto& [name, elems] : j.at("stages").items()) {
      if (!elems.is_array()) model_error("stage " + name + ": element list must be an array");
      auto& list = m.cat.stages[name];
      for (const auto& e : elems) {
        std::string s = stage_element_from_json(e, "stage " + name);
        if (std::find(list.begin(), list.end(), s) != list.end()) model_error("stage " + name + ": duplicate element " + s);
        list.push_back(s);
      }
    }
  }
  if (j.contains("types")) {
    for (const auto& [name, elems] : j.at("types").items()) {
      if (!elems.is_array()) model_error("type " + name + ": element list must be an array");
      auto& list = m.car.types[name];
      for (const auto& e : elems) {
        Value v = element_from_json(e, "type " + name);
        if (std::find(list.begin(), list.end(), v) != list.end()) model_error("type " + name + ": duplicate element");
        list.push_back(v);
      }
    }
  }
  if (j.contains("arrows")) {
    for (const auto& [name, a] : j.at("arrows").items()) {
      std::string where = "arrow " + name;
      StageArrow arr{name, string_member(a, "dom", where), string_member(a, "cod", where), {}};
      const json& map = member(a, "map", where);
      if (!map.is_object()) model_error(where + ": map must be an object");
      for (const auto& [k, v] : map.items()) arr.map[k] = stage_element_from_json(v, where);
      m.cat.arrows[name] = std::move(arr);
    }
  }
  if (j.contains("transitions")) {
    for (const auto& [name, t] : j.at("transitions").items()) {
      std::string where = "transition " + name;
      Transition tr{name, string_member(t, "dom", where), string_member(t, "cod", where), {}};
      const json& map = member(t, "map", where);
      if (!map.is_object()) model_error(where + ": map must be an object");
      for (const auto& [k, v] : map.items()) {
        tr.map[element_from_json(json(k), where)] = element_from_json(v, where);
      }
      m.car.transitions[name] = std::move(tr);
    }
  }
  if (j.contains("composites")) {
    for (const auto& [name, parts] : j.at("composites").items()) {
      if (!parts.is_array() || parts.size() != 2 || !parts[0].is_string() || !parts[1].is_string()) {
        model_error("composite " + name + ": expected [\"f\", \"g\"]");
      }
      m.cat.composites[name] = {parts[0].get<std::string>(), parts[1].get<std::string>()};
    }
  }
  if (j.contains("identities")) {
    for (const auto& [name, stage] : j.at("identities").items()) {
      if (!stage.is_string()) model_error("identity " + name + ": expected a stage name");
      m.cat.identities[name] = stage.get<std::string>();
    }
  }
  validate(m);
  return m;
}

void validate(const Model& m) {
  for (const auto& [name, a] : m.cat.arrows) {
    std::string where = "arrow " + name;
    if (m.cat.stages.count(a.dom) == 0) model_error(where + ": unknown domain stage " + a.dom);
    if (m.cat.stages.count(a.cod) == 0) model_error(where + ": unknown codomain stage " + a.cod);
    const auto& cod = m.cat.stages.at(a.cod);
    for (const auto& e : m.cat.stages.at(a.dom)) {
      auto it = a.map.find(e);
      if (it == a.map.end()) model_error(where + ": not defined at " + e);
      if (std::find(cod.begin(), cod.end(), it->second) == cod.end()) {
        model_error(where + ": image " + it->second + " of " + e + " is not in " + a.cod);
      }
    }
    if (a.map.size() != m.cat.stages.at(a.dom).size()) model_error(where + ": maps elements outside " + a.dom);
  }
  for (const auto& [name, t] : m.car.transitions) {
    std::string where = "transition " + name;
    if (m.car.types.count(t.dom) == 0) model_error(where + ": unknown domain type " + t.dom);
    if (m.car.types.count(t.cod) == 0) model_error(where + ": unknown codomain type " + t.cod);
    const auto& cod = m.car.types.at(t.cod);
    for (const auto& e : m.car.types.at(t.dom)) {
      auto it = t.map.find(e);
      if (it == t.map.end()) model_error(where + ": not defined at " + render(e));
      if (std::find(cod.begin(), cod.end(), it->second) == cod.end()) {
        model_error(where + ": image " + render(it->second) + " is not in " + t.cod);
      }
    }
    if (t.map.size() != m.car.types.at(t.dom).size()) model_error(where + ": maps elements outside " + t.dom);
  }
  auto known_arrow = [&](const std::string& n) {
    try {
      m.cat.arrow(n);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  for (const auto& [name, parts] : m.cat.composites) {
    for (const auto& p : {name, parts.first, parts.second}) {
      if (!known_arrow(p)) model_error("composite " + name + ": unknown arrow " + p);
    }
  }
  for (const auto& [name, stage] : m.cat.identities) {
    if (!known_arrow(name)) model_error("identity " + name + ": unknown arrow");
    if (m.cat.stages.count(stage) == 0) model_error("identity " + name + ": unknown stage " + stage);
  }
}

Individual constant_individual(const Model& model, std::string_view stage, const TypeExpr& type, Value v) {
  return Individual{std::string(stage), type, std::vector<Value>(model.cat.elements(stage).size(), v)};
}

Value at(const Model& model, const Individual& h, std::string_view element) {
  return h.values[model.cat.index_of(h.stage, element)];
}

Individual parse_individual(const Model& model, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    model_error(std::string("invalid JSON: ") + e.what());
  }
  Individual h;
  h.stage = string_member(j, "stage", "individual");
  try {
    h.type = parse_type(string_member(j, "type", "individual"));
  } catch (const SyntaxError& e) {
    model_error("individual: bad type: " + e.detail());
  }
  if (model.cat.stages.count(h.stage) == 0) model_error("individual: unknown stage " + h.stage);
  const json& map = member(j, "map", "individual");
  if (!map.is_object()) model_error("individual: map must be an object");
  auto carrier = model.carrier(h.type);
  for (const auto& e : model.cat.elements(h.stage)) {
    if (!map.contains(e)) model_error("individual: not defined at " + e);
    Value v = element_from_json(map.at(e), "individual");
    if (std::find(carrier.begin(), carrier.end(), v) == carrier.end()) {
      model_error("individual: value " + render(v) + " at " + e + " is not in " + render(h.type));
    }
    h.values.push_back(v);
  }
  if (map.size() != h.values.size()) model_error("individual: map has elements outside stage " + h.stage);
  return h;
}

std::string individual_json(const Model& model, const Individual& h) {
  json map = json::object();
  const auto& elems = model.cat.elements(h.stage);
  for (std::size_t i = 0; i < elems.size(); ++i) map[elems[i]] = render(h.values[i]);
  json j = {{"stage", h.stage}, {"type", render(h.type)}, {"map", map}};
  return j.dump();
}

std::string render(const Model& model, const Individual& h) { return render_values(model, h); }

std::vector<Individual> hom(const Model& model, std::string_view stage, const TypeExpr& type) {
  const auto& elems = model.cat.elements(stage);
  auto car = model.carrier(type);
  bounded_power(car.size(), elems.size(), model.cap, "hom(" + std::string(stage) + ", " + render(type) + ")");
  std::vector<Individual> out;
  odometer(car.size(), elems.size(), [&](const std::vector<std::size_t>& d) {
    Individual h{std::string(stage), type, {}};
    h.values.reserve(d.size());
    for (auto k : d) h.values.push_back(car[k]);
    out.push_back(std::move(h));
  });
  return out;
}

Individual restrict(const Individual& h, const StageArrow& f, const Model& model) {
  if (f.cod != h.stage) {
    throw Error(ErrorKind::StageMismatch,
                "arrow " + f.name + " ends at " + f.cod + " but the individual lives on " + h.stage);
  }
  Individual out{f.dom, h.type, {}};
  for (const auto& b : model.cat.elements(f.dom)) {
    out.values.push_back(h.values[model.cat.index_of(h.stage, f.map.at(b))]);
  }
  return out;
}

Individual transact(const Transition& g, const Individual& h) {
  if (!(h.type == TypeExpr::base(g.dom))) {
    throw Error(ErrorKind::TypeMismatch,
                "transition " + g.name + " starts at " + g.dom + " but the individual has type " + render(h.type));
  }
  Individual out{h.stage, TypeExpr::base(g.cod), {}};
  for (const auto& v : h.values) {
    auto it = g.map.find(v);
    if (it == g.map.end()) throw Error(ErrorKind::TypeMismatch, g.name + " is not defined at " + render(v));
    out.values.push_back(it->second);
  }
  return out;
}

Individual clone_transact(const Transition& g, const Individual& h, const StageArrow& f, const Model& model) {
  return transact(g, restrict(h, f, model));
}

Transition identity_transition(const Model& model, const std::string& type) {
  Transition t{"1_" + type, type, type, {}};
  for (const auto& v : model.carrier(TypeExpr::base(type))) t.map[v] = v;
  return t;
}

std::vector<Value> stage_state(const Model& model, std::string_view stage, std::string_view element,
                               const std::vector<Individual>& pop) {
  std::size_t idx = model.cat.index_of(stage, element);
  std::set<Value> out;
  for (const auto& h : pop) {
    if (h.stage != stage) {
      throw Error(ErrorKind::StageMismatch, "individual on " + h.stage + " in a population over " + std::string(stage));
    }
    out.insert(h.values[idx]);
  }
  return {out.begin(), out.end()};
}

Individual rel_to_func(const Relation& r, const Model& model) {
  const auto& elems = model.cat.elements(r.stage);
  std::vector<std::vector<Value>> sections(elems.size());
  for (const auto& [i, t] : r.pairs) sections[model.cat.index_of(r.stage, i)].push_back(t);
  Individual h{r.stage, TypeExpr::power(r.type), {}};
  for (auto& s : sections) h.values.push_back(Value::set(std::move(s)));
  return h;
}

Relation func_to_rel(const Individual& h, const Model& model) {
  if (h.type.kind() != TypeExpr::Kind::Power) {
    throw Error(ErrorKind::TypeMismatch, "expected an individual into a power type, got " + render(h.type));
  }
  Relation r{h.stage, h.type.left(), {}};
  const auto& elems = model.cat.elements(h.stage);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& t : h.values[i].elements()) r.pairs.emplace(elems[i], t);
  }
  return r;
}

std::vector<std::pair<Value, Value>> membership_domain(const Model& model, const TypeExpr& type) {
  std::vector<std::pair<Value, Value>> out;
  for (const auto& u : model.carrier(TypeExpr::power(type))) {
    for (const auto& t : u.elements()) out.emplace_back(u, t);
  }
  return out;
}

std::vector<std::string> check_functor_laws(const Model& model, const TypeExpr& type) {
  std::vector<std::string> report;
  const auto& cat = model.cat;
  for (const auto& [stage, _] : cat.stages) {
    StageArrow id = cat.identity(stage);
    for (const auto& h : hom(model, stage, type)) {
      if (!(restrict(h, id, model) == h)) {
        report.push_back("identity law fails for 1_" + stage + " at h = " + render(model, h));
        break;
      }
    }
  }
  for (const auto& [fname, f] : cat.arrows) {
    for (const auto& [gname, g] : cat.arrows) {
      if (g.cod != f.dom) continue;
      StageArrow fg = compose(f, g);
      for (const auto& h : hom(model, f.cod, type)) {
        if (!(restrict(restrict(h, f, model), g, model) == restrict(h, fg, model))) {
          report.push_back("composition law fails for " + fname + " . " + gname + " at h = " + render(model, h));
          break;
        }
      }
    }
  }
  for (const auto& [name, parts] : cat.composites) {
    StageArrow c = cat.arrow(name);
    StageArrow f = cat.arrow(parts.first);
    StageArrow g = cat.arrow(parts.second);
    if (g.cod != f.dom || c.dom != g.dom || c.cod != f.cod) {
      report.push_back("composite " + name + " = " + f.name + " . " + g.name + " has mismatched ends");
      continue;
    }
    for (const auto& h : hom(model, f.cod, type)) {
      if (!(restrict(h, c, model) == restrict(restrict(h, f, model), g, model))) {
        report.push_back("composite " + name + " = " + f.name + " . " + g.name + " fails at h = " + render(model, h));
        break;
      }
    }
  }
  for (const auto& [name, stage] : cat.identities) {
    StageArrow a = cat.arrow(name);
    if (a.dom != stage || a.cod != stage) {
      report.push_back("identity " + name + " on " + stage + " has mismatched ends");
      continue;
    }
    for (const auto& h : hom(model, stage, type)) {
      if (!(restrict(h, a, model) == h)) {
        report.push_back("identity " + name + " on " + stage + " fails at h = " + render(model, h));
        break;
      }
    }
  }
  std::sort(report.begin(), report.end());
  return report;
}

std::vector<std::string> check_naturality(const Model& model, const Transition& g, const StageArrow& f) {
  std::vector<std::string> report;
  for (const auto& h : hom(model, f.cod, TypeExpr::base(g.dom))) {
    Individual lhs = transact(g, restrict(h, f, model));
    Individual rhs = restrict(transact(g, h), f, model);
    if (!(lhs == rhs)) {
      report.push_back("naturality fails for " + g.name + " along " + f.name + " at h = " + render(model, h));
    }
  }
  std::sort(report.begin(), report.end());
  return report;
}

}  // namespace objeval

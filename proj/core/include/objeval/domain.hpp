#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "objeval/eval.hpp"
#include "objeval/types.hpp"
#include "objeval/value.hpp"

namespace objeval {

// Default bound on the number of candidates any enumeration may produce;
// OBJEVAL_ENUM_CAP overrides it.
std::size_t default_enum_cap();

struct StageArrow {
  std::string name;
  std::string dom;
  std::string cod;
  std::map<std::string, std::string> map;

  friend bool operator==(const StageArrow&, const StageArrow&) = default;
};

// A finite category of stages. Every stage has an implicit identity named
// 1_<stage>; composites of listed arrows are computed.
struct StageCat {
  std::map<std::string, std::vector<std::string>> stages;
  std::map<std::string, StageArrow> arrows;
  // Claims read from a model file: composites[h] = {f, g} states h = f . g,
  // identities[h] = A states h = 1_A. check_functor_laws verifies them.
  std::map<std::string, std::pair<std::string, std::string>> composites;
  std::map<std::string, std::string> identities;

  const std::vector<std::string>& elements(std::string_view stage) const;
  std::size_t index_of(std::string_view stage, std::string_view element) const;
  StageArrow identity(std::string_view stage) const;
  // Listed arrow or 1_<stage>.
  StageArrow arrow(std::string_view name) const;
};

// f . g: apply g, then f. Requires g.cod == f.dom.
StageArrow compose(const StageArrow& f, const StageArrow& g);

struct Transition {
  std::string name;
  std::string dom;
  std::string cod;
  std::map<Value, Value> map;
};

struct Carrier {
  std::map<std::string, std::vector<Value>> types;
  std::map<std::string, Transition> transitions;
};

struct Model {
  StageCat cat;
  Carrier car;
  std::size_t cap = default_enum_cap();

  // Elements of any type built from the base types: 1 = {()}, Omega =
  // {false, true}, products, all finite functions, all subsets.
  std::vector<Value> carrier(const TypeExpr& type) const;

  // Standard primitives, every transition by name, and forall@T / exists@T
  // for each listed type.
  PrimitiveTable primitives(const std::vector<TypeExpr>& quantified = {}) const;
};

// Raises Error(Model) on malformed input or on arrows/transitions that are not
// total maps between the declared sets.
Model parse_model(std::string_view json_text);
void validate(const Model& model);

// h : I -> T, stored as the values at I's elements in declaration order.
struct Individual {
  std::string stage;
  TypeExpr type = TypeExpr::unknown();
  std::vector<Value> values;

  friend bool operator==(const Individual& a, const Individual& b) {
    return a.stage == b.stage && a.type == b.type && a.values == b.values;
  }
  friend bool operator<(const Individual& a, const Individual& b) {
    if (a.stage != b.stage) return a.stage < b.stage;
    if (!(a.type == b.type)) return a.type < b.type;
    return a.values < b.values;
  }
};

Individual constant_individual(const Model& model, std::string_view stage, const TypeExpr& type, Value v);
Value at(const Model& model, const Individual& h, std::string_view element);

Individual parse_individual(const Model& model, std::string_view json_text);
std::string individual_json(const Model& model, const Individual& h);
std::string render(const Model& model, const Individual& h);

// H_T(I): every total function from I's elements into T's carrier.
std::vector<Individual> hom(const Model& model, std::string_view stage, const TypeExpr& type);

// h . f
Individual restrict(const Individual& h, const StageArrow& f, const Model& model);
// g . h
Individual transact(const Transition& g, const Individual& h);
// g . h . f
Individual clone_transact(const Transition& g, const Individual& h, const StageArrow& f, const Model& model);

Transition identity_transition(const Model& model, const std::string& type);

// { h(i) | h in pop }, sorted.
std::vector<Value> stage_state(const Model& model, std::string_view stage, std::string_view element,
                               const std::vector<Individual>& pop);

struct Relation {
  std::string stage;
  TypeExpr type = TypeExpr::unknown();
  std::set<std::pair<std::string, Value>> pairs;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.stage == b.stage && a.type == b.type && a.pairs == b.pairs;
  }
};

// h_R(i) = { t | i R t }
Individual rel_to_func(const Relation& r, const Model& model);
// i R_h t iff t in h(i)
Relation func_to_rel(const Individual& h, const Model& model);
// { (U, t) | U subset of T, t in U }
std::vector<std::pair<Value, Value>> membership_domain(const Model& model, const TypeExpr& type);

// Violations of H_T(1_A) = 1 and H_T(f . g) = H_T(g) . H_T(f) over all
// composable pairs of listed arrows, plus the declared composites and
// identities; sorted, empty when the laws hold.
std::vector<std::string> check_functor_laws(const Model& model, const TypeExpr& type);

// H_g(B) . H_T(f) = H_S(f) . H_g(A) on every individual; sorted violations.
std::vector<std::string> check_naturality(const Model& model, const Transition& g, const StageArrow& f);

}  // namespace objeval

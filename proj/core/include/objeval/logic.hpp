#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "objeval/compiler.hpp"
#include "objeval/domain.hpp"
#include "objeval/syntax.hpp"

namespace objeval {

using Valuation = std::map<std::string, Individual, std::less<>>;

// Truth of phi at stage A. Atomic formulas are checked at every element of A
// and hold when they hold everywhere; connectives are classical; quantifiers
// range over hom(A, T).
bool eval_formula(const Formula& phi, std::string_view stage, const Valuation& nu, const Model& model);

// C(A) = { t in hom(A, T) | phi holds at A with y := t }. `context` may bind
// further free variables of phi.
std::vector<Individual> concept_at(const Formula& phi, const std::string& y, const TypeExpr& type,
                                   std::string_view stage, const Model& model, const Valuation& context = {});

// C_f for f : B -> A, the image of C(A) under restriction along f; sorted.
std::vector<Individual> concept_along(const Formula& phi, const std::string& y, const TypeExpr& type,
                                      const StageArrow& f, const Model& model);

// The unique d in the carrier with phi(d), phi evaluated at a one-element
// stage where every variable of `context` is constant. NoWitness or NotUnique
// otherwise.
Value describe(const Formula& phi, const std::string& x, const std::vector<Value>& carrier,
               const Model& model, const std::map<std::string, Value, std::less<>>& context = {});

// Variables of quantifiers in phi, with their types, in order of appearance.
std::vector<TypeExpr> quantified_types(const Formula& phi);

struct Extent {
  Relation relation;                     // { [i, t] | phi holds at [i, t] }
  Individual function;                   // h_R
  std::vector<std::vector<Value>> sets;  // C({i}) per element of the stage
};

// Runs the compiled code of phi on [env_i, t] for every element i of the
// stage and every t in T. env_i holds the values of `ambient` at i.
Extent concept_extent_via_code(const Formula& phi, const std::string& x, std::string_view stage,
                               const TypeExpr& type, const Model& model, const Valuation& ambient = {});

// The same extents from eval_formula on the one-element stages {i}.
Extent concept_extent_via_formula(const Formula& phi, const std::string& x, std::string_view stage,
                                  const TypeExpr& type, const Model& model, const Valuation& ambient = {});

}  // namespace objeval

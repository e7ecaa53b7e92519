#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "objeval/comb.hpp"
#include "objeval/normalize.hpp"
#include "objeval/parser.hpp"
#include "objeval/syntax.hpp"
#include "objeval/types.hpp"

namespace objeval {

struct Slot {
  std::string name;
  TypeExpr type = TypeExpr::unknown();

  friend bool operator==(const Slot&, const Slot&) = default;
};

// (...((E x D_s1) x D_s2) ...) x D_sn. The last slot is the outermost right
// component.
struct EnvShape {
  std::string base = "E";
  std::vector<Slot> slots;

  // Position of the latest slot with this name.
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  EnvShape with(Slot slot) const;
  EnvShape prefix(std::size_t n) const;

  friend bool operator==(const EnvShape&, const EnvShape&) = default;
};

// "E; y:Dy; x:Dx". The leading base name may be omitted; a slot without a
// type gets the unknown type.
EnvShape parse_shape(std::string_view text);
std::string render(const EnvShape& shape);

struct CompiledUnit {
  CombTerm code;  // normalized
  CombTerm raw;   // before normalization
  EnvShape shape;
  TypeExpr result_ty;
};

// Snd . Fst^k with k = slots - 1 - index.
CombTerm access(std::string_view name, const EnvShape& shape);

// <Fst . Fst, Snd> : Env x D_name -> Env, for the last slot only.
CombTerm subst_map(const EnvShape& shape, std::string_view name);

// Cur(g . Snd): the entry point of builtin g.
CombTerm compile_builtin_app(const std::string& g, const TypeExpr& arg_ty,
                             const BuiltinSet& known = default_builtins());

TypeExpr builtin_type(const std::string& g);

// Type read off a runtime value: integers are nat, named atoms atom.
TypeExpr value_type(const Value& v);

// An abstraction whose bound variable is not the last slot is handled by
// extending the shape (binder not yet present, slot filled with a
// placeholder) or by projecting away the slots after it (binder present
// further in); the latter fails with ShapeMismatch when the abstraction
// mentions one of the dropped slots.
CompiledUnit compile(const LambdaTerm& term, const EnvShape& shape,
                     const BuiltinSet& known = default_builtins(), const TraceSink& rewrites = {});

// Code for Env x T -> Omega built as Eps . <Cur(phi . Subst_x) . Fst, Snd>;
// `raw` keeps that form, `code` is its normal form. Quantifiers compile to
// primitives named forall@T / exists@T applied to the curried body.
CompiledUnit compile_formula(const Formula& phi, const EnvShape& shape, std::string_view subject,
                             const TraceSink& rewrites = {});

// Boolean code for phi over the environment described by shape.
CombTerm formula_code(const Formula& phi, const EnvShape& shape);

std::string quantifier_primitive(bool universal, const TypeExpr& type);

}  // namespace objeval

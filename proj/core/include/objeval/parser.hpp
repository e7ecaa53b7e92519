#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "objeval/comb.hpp"
#include "objeval/syntax.hpp"
#include "objeval/types.hpp"
#include "objeval/value.hpp"

namespace objeval {

// Names that parse as Builtin rather than Var. Operator symbols such as "+"
// are only accepted when declared here.
using BuiltinSet = std::set<std::string, std::less<>>;

const BuiltinSet& default_builtins();

// term := "\" ident ("," ident)* "." term | atom+
// atom := ident | integer | atom:<name> | "[" term "," term "]" | "(" term ")"
// Application is left-associative; an abstraction body extends as far right
// as possible.
LambdaTerm parse_term(std::string_view text, const BuiltinSet& builtins = default_builtins());

// One term per non-blank line.
std::vector<LambdaTerm> parse_terms(std::string_view text,
                                    const BuiltinSet& builtins = default_builtins());

// Precedence not > and > or > "->"; quantifiers extend as far right as
// possible; "->" associates to the right.
Formula parse_formula(std::string_view text);
std::vector<Formula> parse_formulas(std::string_view text);

// iota x:T. phi
Description parse_description(std::string_view text);

// type := prod ("->" type)? ; prod := atom ("*" atom)* ;
// atom := ident | "1" | "Omega" | "[" type "]" | "(" type ")"
TypeExpr parse_type(std::string_view text);

// The notation produced by render(CombTerm); "." associates to the right.
CombTerm parse_comb(std::string_view text);

// integer | atom:<name> | <name> | builtin:<name> | true | false | () | ?
//   | [lit, lit] | {lit, ...} | fun{lit -> lit, ...}
Value parse_literal(std::string_view text);

// Lines of the form `name = literal`; blank lines and lines starting with '#'
// are skipped. Order of appearance is preserved.
std::vector<std::pair<std::string, Value>> parse_bindings(std::string_view text);

bool is_identifier(std::string_view name);

}  // namespace objeval

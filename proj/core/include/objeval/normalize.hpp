#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "objeval/comb.hpp"

namespace objeval {

using TraceSink = std::function<void(const std::string&)>;

struct NormalizeStats {
  std::size_t rule_steps = 0;   // R1..R7 firings
  std::size_t assoc_steps = 0;  // re-association of a left-nested composition
};

// Rewrites to normal form under
//   R1  Eps . <Cur(h) . Fst, Snd>  ->  h
//   R2  Cur(Eps . <k . Fst, Snd>)  ->  k      (also Cur(Eps) -> Id)
//   R3  Fst . <a, b>               ->  a
//   R4  Snd . <a, b>               ->  b
//   R5  <a, b> . c                 ->  <a . c, b . c>
//   R6  Id . a -> a,  a . Id -> a
//   R7  <Fst, Snd>                 ->  Id
// with compositions kept right-nested. Patterns match the right-nested tree
// literally: "k . Fst" is a two-element chain.
//
// Subterms are normalized first; each constructor then only has to deal with
// normal arguments. Termination: a composition step recurses either into
// strictly smaller left arguments (re-association, R5) or stops (R1, R3, R4,
// R6), so the recursion is well-founded on the size of the left argument.
// Every sink line has the form "<rule>: <redex> ~> <contractum>".
CombTerm normalize(const CombTerm& term, const TraceSink& trace = {},
                   NormalizeStats* stats = nullptr);

bool is_normal(const CombTerm& term);

bool equivalent(const CombTerm& a, const CombTerm& b);

}  // namespace objeval

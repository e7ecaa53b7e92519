#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "objeval/domain.hpp"
#include "objeval/pipeline.hpp"
#include "objeval/syntax.hpp"

namespace objeval {

using Rng = std::mt19937_64;

// Uniform in [0, n), the same on every platform.
std::size_t pick(Rng& rng, std::size_t n);

struct TermCase {
  LambdaTerm term;
  Bindings bindings;
};

// A simply typed term of ground result type (nat, atom or nat * atom) with
// depth at most max_depth and at most three free variables, each bound to a
// value: integers and atoms from five-element sets, or builtin:succ. Bound
// names are drawn from a small pool, so shadowing and reuse of free names
// occur.
TermCase random_term(Rng& rng, std::size_t max_depth = 5);

// Stage size lists of length 1..max_stages with entries 0..max_size, each
// multiset once, in non-decreasing order.
std::vector<std::vector<std::size_t>> size_profiles(std::size_t max_stages, std::size_t max_size);

// Stages S0, S1, ... of the given sizes with every function between them as
// an arrow (named Si_Sj_k), and types T0, T1, ... of the given sizes with
// elements t0, t1, ...; when with_transitions is set every function between
// types is a transition (named Ti_Tj_k).
Model full_model(const std::vector<std::size_t>& stage_sizes, const std::vector<std::size_t>& type_sizes,
                 bool with_transitions);

}  // namespace objeval

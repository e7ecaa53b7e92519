#include <benchmark/benchmark.h>

#include "objeval/compiler.hpp"
#include "objeval/domain.hpp"
#include "objeval/generate.hpp"
#include "objeval/logic.hpp"
#include "objeval/normalize.hpp"
#include "objeval/parser.hpp"
#include "objeval/pipeline.hpp"

using namespace objeval;

static void BM_CompileGolden(benchmark::State& state) {
  LambdaTerm t = parse_term("\\x. y x");
  EnvShape shape = parse_shape("E; y; x");
  for (auto _ : state) benchmark::DoNotOptimize(compile(t, shape));
}
BENCHMARK(BM_CompileGolden);

static void BM_NormalizeCompound(benchmark::State& state) {
  CombTerm raw = parse_comb("Eps . <Cur((Eps . <Snd . Fst . Fst, Snd>) . <Fst . Fst, Snd>), Snd . Fst>");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(raw));
}
BENCHMARK(BM_NormalizeCompound);

static void BM_RunSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run("+ [2, 3]"));
}
BENCHMARK(BM_RunSum);

static void BM_RunRandomTerms(benchmark::State& state) {
  Rng rng(7);
  std::vector<TermCase> cases;
  for (int i = 0; i < 100; ++i) cases.push_back(random_term(rng));
  for (auto _ : state) {
    for (const auto& c : cases) benchmark::DoNotOptimize(run(c.term, c.bindings));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
}
BENCHMARK(BM_RunRandomTerms);

static void BM_Hom(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Model m = full_model({n}, {3}, false);
  for (auto _ : state) benchmark::DoNotOptimize(hom(m, "S0", TypeExpr::base("T0")));
}
BENCHMARK(BM_Hom)->DenseRange(1, 6);

static void BM_ConceptExtent(benchmark::State& state) {
  Model m = full_model({3}, {3}, true);
  Formula phi = parse_formula("x = T0_T0_5 x");
  for (auto _ : state) benchmark::DoNotOptimize(concept_extent_via_code(phi, "x", "S0", TypeExpr::base("T0"), m));
}
BENCHMARK(BM_ConceptExtent);
BENCHMARK_MAIN();

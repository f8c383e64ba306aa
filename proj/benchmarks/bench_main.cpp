#include <benchmark/benchmark.h>

#include "notpowers/families.hpp"
#include "notpowers/group.hpp"
#include "notpowers/power.hpp"
#include "notpowers/verifier.hpp"

namespace np = notpowers;

namespace {

np::FiniteGroup bench_group(const std::string& spec) { return np::make(spec); }

void BM_TableValidation(benchmark::State& state) {
  np::FiniteGroup g = bench_group("symmetric:" + std::to_string(state.range(0)));
  std::vector<np::element_t> flat = g.table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::FiniteGroup::from_table(flat, g.order()));
  }
}
BENCHMARK(BM_TableValidation)->Arg(4)->Arg(5);

void BM_PermutationClosure(benchmark::State& state) {
  np::PermutationGenSet gens{int(state.range(0)), {}};
  std::vector<np::element_t> cycle(gens.degree), swap(gens.degree);
  for (int i = 0; i < gens.degree; ++i) cycle[i] = np::element_t((i + 1) % gens.degree);
  for (int i = 0; i < gens.degree; ++i) swap[i] = np::element_t(i);
  std::swap(swap[0], swap[1]);
  gens.generators = {cycle, swap};
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::build_from_permutations(gens));
  }
}
BENCHMARK(BM_PermutationClosure)->Arg(5)->Arg(6);

void BM_AnalyzePowers(benchmark::State& state) {
  np::FiniteGroup g = bench_group("symmetric:" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::analyze_powers(g, 2));
  }
}
BENCHMARK(BM_AnalyzePowers)->Arg(4)->Arg(5)->Arg(6);

void BM_ConjugacyClasses(benchmark::State& state) {
  np::FiniteGroup g = bench_group("symmetric:" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::conjugacy_classes(g));
  }
}
BENCHMARK(BM_ConjugacyClasses)->Arg(4)->Arg(5);

void BM_SubgroupLattice(benchmark::State& state) {
  np::FiniteGroup g = bench_group("symmetric:4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::all_subgroups(g, 200));
  }
}
BENCHMARK(BM_SubgroupLattice);

void BM_BuiltinCorpus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::builtin_corpus(int(state.range(0))));
  }
}
BENCHMARK(BM_BuiltinCorpus)->Arg(24)->Arg(60);

void BM_VerifySuite(benchmark::State& state) {
  std::vector<np::FiniteGroup> corpus = np::builtin_corpus(int(state.range(0)));
  std::vector<std::string> checks{"divisible", "pgroup_bound", "theoremB"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(np::run_suite(corpus, checks));
  }
}
BENCHMARK(BM_VerifySuite)->Arg(24)->Arg(48);

}  // namespace

BENCHMARK_MAIN();

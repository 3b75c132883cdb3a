// Serial reference loops against their OpenMP versions on tables with no
// failing triple, so every kernel scans all n^3 triples.

#include <benchmark/benchmark.h>

#include "nearbrace/kernels.hpp"
#include "nearbrace/near_brace.hpp"
#include "nearbrace/parameters.hpp"
#include "nearbrace/solutions.hpp"

using namespace nearbrace;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(1) ? "omp" : "serial"); }

void BM_associativity(benchmark::State& state) {
  const GroupTable g = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::associativity_failure(g.table(), exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
  label(state);
}

void BM_distributivity(benchmark::State& state) {
  const NearBrace nb = trivial_near_brace(cyclic(static_cast<std::size_t>(state.range(0))), 1);
  const GroupTable& add = nb.add_group();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::distributivity_failure(add.table(), add.inverses(), add.identity(), nb.mul_group().table(), exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
  label(state);
}

BraidMap conjugation(std::size_t order) {
  const NearBrace nb = trivial_near_brace(dihedral(order), 0);
  return build_solution(nb, *make_params(nb, 0, 0, 0));
}

void BM_braid_constraints(benchmark::State& state) {
  const BraidMap m = conjugation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (auto which : {kernels::BraidConstraint::c1, kernels::BraidConstraint::c2, kernels::BraidConstraint::c3})
      benchmark::DoNotOptimize(kernels::braid_constraint_failure(m.sigma, m.tau, which, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * 3 * state.range(0) * state.range(0) * state.range(0));
  label(state);
}

void BM_braid_composition(benchmark::State& state) {
  const BraidMap m = conjugation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::braid_composition_failure(m.sigma, m.tau, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
  label(state);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {8, 16, 32, 64})
    for (int omp : {0, 1}) b->Args({n, omp});
}

}  // namespace

BENCHMARK(BM_associativity)->Apply(sizes);
BENCHMARK(BM_distributivity)->Apply(sizes);
BENCHMARK(BM_braid_constraints)->Apply(sizes);
BENCHMARK(BM_braid_composition)->Apply(sizes);

BENCHMARK_MAIN();

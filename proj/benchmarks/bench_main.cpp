#include <benchmark/benchmark.h>

#include "wavepart/encodings.hpp"
#include "wavepart/info.hpp"
#include "wavepart/measures.hpp"

using namespace wavepart;

static void BM_TwirlRegularDihedral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rep = regular_representation(dihedral_group(n));
  auto rho = random_density(rep.dim(), rep.dim(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(twirl(rep, rho));
  state.SetLabel(rep.group().label());
}
BENCHMARK(BM_TwirlRegularDihedral)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

static void BM_HolevoParticle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rep = regular_representation(cyclic_group(n));
  auto ens = particle_ensemble(rep, random_density(n, 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(holevo_chi(ens));
}
BENCHMARK(BM_HolevoParticle)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

// Accessible-information search at the default budget; the qubit case
// includes the projective grid.
static void BM_AccessibleInfo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rep = regular_representation(cyclic_group(n));
  auto ens = particle_ensemble(rep, random_density(n, 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(accessible_info_lower(ens, OptimizerBudget{}, 0));
}
BENCHMARK(BM_AccessibleInfo)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WeylEncode(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto rep = regular_representation(cyclic_group(d));
  auto enc = weyl_unitaries(d);
  auto rho = random_density(d, d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(holevo_chi(wave_encode(enc, rep, rho)));
}
BENCHMARK(BM_WeylEncode)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK_MAIN();

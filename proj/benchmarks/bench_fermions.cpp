#include <benchmark/benchmark.h>

#include "symtherm/ensembles.hpp"
#include "symtherm/fermions.hpp"
#include "symtherm/models.hpp"

using namespace symtherm;

// 4^n monomial expansion, the dominant fermionic cost
static void BM_FermionicTranspose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MajoranaSystem sys(n);
  const Operator h = build_fermionic_hamiltonian(
      make_preset("majorana-hopping", {.n_modes = n, .boundary = Boundary::Open}), sys);
  const Operator rho = gibbs_state(h, 0.7);
  std::vector<int> half_modes;
  for (int m = 0; m < n / 2; ++m) half_modes.push_back(m);
  const FermionPartition cut = FermionPartition::from_modes(half_modes);
  for (auto _ : state) {
    Operator pt = fermionic_partial_transpose(rho, cut, sys);
    benchmark::DoNotOptimize(pt.data());
  }
}
BENCHMARK(BM_FermionicTranspose)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_MajoranaSystemBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MajoranaSystem sys(n);
    benchmark::DoNotOptimize(sys.parity().data());
  }
}
BENCHMARK(BM_MajoranaSystemBuild)->DenseRange(2, 8, 2);

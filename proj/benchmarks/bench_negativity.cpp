#include <benchmark/benchmark.h>

#include "symtherm/entanglement.hpp"
#include "symtherm/models.hpp"

using namespace symtherm;

// one Fig-2-style sweep point end to end: thermal state + transpose + spectrum
static void BM_ClusterSweepPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rep =
      Representation::homogeneous(AbelianGroup::finite({2}), SiteRep::from_pauli({"X"}), n);
  const Operator h = build_hamiltonian(make_preset("cluster-chain", {.n_sites = n}), rep);
  Partition half;
  for (int s = 0; s < n / 2; ++s) half.a_sites.push_back(s);
  const IrrepLabel plus{{0}, 0};
  for (auto _ : state) {
    const double en = log_negativity(canonical_state(h, 0.5, rep, plus), half);
    benchmark::DoNotOptimize(en);
  }
}
BENCHMARK(BM_ClusterSweepPoint)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_IrrepProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = AbelianGroup::finite({3});
  const auto rep = Representation::homogeneous(g, SiteRep::from_diag_phases(g, {{0, 1}}), n);
  for (auto _ : state) {
    Operator p = irrep_projector(rep, IrrepLabel{{1}, 0});
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_IrrepProjector)->DenseRange(4, 8, 2);

#include <benchmark/benchmark.h>

#include <random>

#include "symtherm/linalg.hpp"

using namespace symtherm;

namespace {

Operator random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m{HilbertStructure({n})};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = cplx(gauss(rng), gauss(rng));
  Operator h = m + m.adjoint();
  h *= cplx(0.5, 0.0);
  return h;
}

}  // namespace

static void BM_EigHermitian(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Operator h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    auto eig = eig_hermitian(h);
    benchmark::DoNotOptimize(eig.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_MatMul(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  const Operator a = random_hermitian(n, rng);
  const Operator b = random_hermitian(n, rng);
  for (auto _ : state) {
    Operator c = a * b;
    benchmark::DoNotOptimize(c.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_PartialTranspose(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n_sites = static_cast<int>(state.range(0));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m{HilbertStructure::uniform(n_sites, 2)};
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.at(r, c) = cplx(gauss(rng), gauss(rng));
  Partition half;
  for (int s = 0; s < n_sites / 2; ++s) half.a_sites.push_back(s);
  for (auto _ : state) {
    Operator pt = partial_transpose(m, half);
    benchmark::DoNotOptimize(pt.data());
  }
}
BENCHMARK(BM_PartialTranspose)->DenseRange(4, 8, 2);

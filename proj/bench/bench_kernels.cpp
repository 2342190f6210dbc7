// Serial reference vs OpenMP kernels on seeded random arrangements.
// Argument: number of hyperplanes in dimension 4.

#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/kernels.hpp"
#include "arrlab/os_algebra.hpp"
#include "arrlab/poset.hpp"

using namespace arrlab;

namespace {

constexpr std::size_t kDim = 4;

Arrangement random_arrangement(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  std::set<std::pair<RatVector, Rat>> seen;
  std::vector<Hyperplane> hs;
  while (hs.size() < n) {
    Hyperplane h;
    for (std::size_t i = 0; i < kDim; ++i) h.normal.emplace_back(d(rng));
    h.offset = Rat(d(rng));
    if (is_zero(h.normal) || !seen.insert(normalized_equation(h.normal, h.offset)).second) continue;
    hs.push_back(std::move(h));
  }
  return Arrangement(kDim, std::move(hs));
}

std::vector<Flat> flats_of(const IntersectionPoset& p) {
  std::vector<Flat> fs;
  for (std::size_t i = 0; i < p.size(); ++i) fs.push_back(p[i]);
  return fs;
}

template <Exec E>
void BM_Build(benchmark::State& state) {
  Arrangement a = random_arrangement(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build(a, E));
}

template <Exec E>
void BM_Moebius(benchmark::State& state) {
  const auto flats = flats_of(build(random_arrangement(static_cast<std::size_t>(state.range(0)), 2), Exec::Serial));
  state.counters["flats"] = static_cast<double>(flats.size());
  for (auto _ : state) {
    if constexpr (E == Exec::Serial)
      benchmark::DoNotOptimize(kernels::moebius_serial(flats));
    else
      benchmark::DoNotOptimize(kernels::moebius_omp(flats));
  }
}

template <Exec E>
void BM_Nbc(benchmark::State& state) {
  Arrangement a = random_arrangement(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(nbc_profile(a, kDefaultCircuitBound, E));
}

}  // namespace

BENCHMARK(BM_Build<Exec::Serial>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Build<Exec::Parallel>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Moebius<Exec::Serial>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Moebius<Exec::Parallel>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Nbc<Exec::Serial>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Nbc<Exec::Parallel>)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "weft/energy.hpp"
#include "weft/partition.hpp"
#include "weft/series.hpp"
#include "weft/transfer.hpp"

using namespace weft;

namespace {

const EnergyMatrix& D() {
  static EnergyMatrix e = overpartition_matrix();
  return e;
}

ColorWord word_bbar_abar_b_a() {
  const StateSet& s = D().states();
  return {s.index_of("bbar"), s.index_of("abar"), s.index_of("b"),
          s.index_of("a")};
}

void BM_enumerate_O(benchmark::State& state) {
  const ColorWord w = word_bbar_abar_b_a();
  const long long n = state.range(0);
  for (auto _ : state) {
    auto rows = enumerate_partitions(D(), Side::O, w, n, Bound::at_least(0));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_enumerate_O)->Arg(10)->Arg(16)->Arg(22);

void BM_enumerate_E(benchmark::State& state) {
  const ColorWord w = word_bbar_abar_b_a();
  const long long n = state.range(0);
  for (auto _ : state) {
    auto rows = enumerate_partitions(D(), Side::E, w, n, Bound::at_least(0));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_enumerate_E)->Arg(10)->Arg(16)->Arg(22);

// The whole forward map over every O-side partition at one energy, i.e. one
// column of a bijection sweep. Enumeration cost is excluded.
void BM_phi_sweep(benchmark::State& state) {
  const ColorWord w = word_bbar_abar_b_a();
  const auto rows =
      enumerate_partitions(D(), Side::O, w, state.range(0), Bound::at_least(0));
  for (auto _ : state)
    for (const ColoredPartition& p : rows) {
      TransferResult r = phi(D(), p);
      benchmark::DoNotOptimize(r.image);
    }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(rows.size()));
}
BENCHMARK(BM_phi_sweep)->Arg(12)->Arg(18);

void BM_phi_psi_roundtrip(benchmark::State& state) {
  const ColorWord w = word_bbar_abar_b_a();
  const auto rows =
      enumerate_partitions(D(), Side::O, w, 16, Bound::at_least(0));
  for (auto _ : state)
    for (const ColoredPartition& p : rows) {
      TransferResult back = psi(D(), phi(D(), p).image);
      benchmark::DoNotOptimize(back.image);
    }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(rows.size()));
}
BENCHMARK(BM_phi_psi_roundtrip);

void BM_euler_product(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedSeries s = euler_product(D(), 1, order, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_euler_product)->Arg(8)->Arg(12)->Arg(16);

void BM_series_from_enumeration(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedSeries s =
        series_from_enumeration(D(), Side::O, 1, order, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_series_from_enumeration)->Arg(8)->Arg(12);

void BM_difference_matrix(benchmark::State& state) {
  for (auto _ : state) {
    DifferenceMatrix m = difference_matrix(D());
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_difference_matrix);

} // namespace

BENCHMARK_MAIN();

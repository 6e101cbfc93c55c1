#include <benchmark/benchmark.h>

#include "permldpc/binary_matrix.hpp"
#include "permldpc/cycle_analysis.hpp"
#include "permldpc/girth_oracle.hpp"
#include "permldpc/proto_matrix.hpp"
#include "permldpc/residue_set.hpp"

using namespace permldpc;

namespace {

ProtoMatrix regular(std::size_t m, std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> i) {
  return build_regular(Permutation::m_cycle(m), ResidueSet(m, a), ResidueSet(m, i));
}

void BM_Expand(benchmark::State& state) {
  const ProtoMatrix p = regular(static_cast<std::size_t>(state.range(0)), {0, 1, 2}, {0, 1, 3, 7, 15});
  for (auto _ : state) benchmark::DoNotOptimize(expand(p));
}
BENCHMARK(BM_Expand)->Arg(31)->Arg(127)->Arg(509);

void BM_Gf2Rank(benchmark::State& state) {
  const BinaryMatrix h = expand(regular(static_cast<std::size_t>(state.range(0)), {0, 1, 2}, {0, 1, 3, 7, 15}));
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(h));
}
BENCHMARK(BM_Gf2Rank)->Arg(31)->Arg(127)->Arg(509);

void BM_OracleGirth(benchmark::State& state) {
  const BinaryMatrix h = expand(regular(static_cast<std::size_t>(state.range(0)), {0, 1}, {0, 1, 4, 6, 13}));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::girth(h));
}
BENCHMARK(BM_OracleGirth)->Arg(29)->Arg(61)->Arg(127);

void BM_Classify(benchmark::State& state) {
  const ProtoMatrix p = regular(static_cast<std::size_t>(state.range(0)), {0, 1}, {0, 1, 4, 6, 13});
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_Classify)->Arg(29)->Arg(61)->Arg(127);

void BM_ClassifyThreeRows(benchmark::State& state) {
  const ProtoMatrix p = regular(static_cast<std::size_t>(state.range(0)), {0, 1, -1}, {0, 1, 4, 6, 10});
  for (auto _ : state) benchmark::DoNotOptimize(classify(p));
}
BENCHMARK(BM_ClassifyThreeRows)->Arg(17)->Arg(31);

}  // namespace

BENCHMARK_MAIN();

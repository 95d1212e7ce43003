// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "rgvss/bitmap.hpp"
#include "rgvss/codec.hpp"
#include "rgvss/oracle.hpp"

namespace {

using rgvss::SchemeParams;
using rgvss::codec::EncodingPolicy;

const EncodingPolicy kPolicy = EncodingPolicy::averaged(SchemeParams::make(2, 3));

void BM_EncodeImageSerial(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  const auto secret = rgvss::test_card(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(rgvss::serial::encode_image(secret, kPolicy, 7));
  state.SetItemsProcessed(state.iterations() * side * side);
}

void BM_EncodeImageParallel(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  const auto secret = rgvss::test_card(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(rgvss::encode_image(secret, kPolicy, 7));
  state.SetItemsProcessed(state.iterations() * side * side);
}

void BM_ReconstructSerial(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  const auto set = rgvss::encode_image(rgvss::test_card(side, side), kPolicy, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgvss::serial::reconstruct(set.shares, rgvss::StackOp::kXor));
  }
  state.SetItemsProcessed(state.iterations() * side * side);
}

void BM_ReconstructParallel(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  const auto set = rgvss::encode_image(rgvss::test_card(side, side), kPolicy, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgvss::reconstruct(set.shares, rgvss::StackOp::kXor));
  }
  state.SetItemsProcessed(state.iterations() * side * side);
}

const rgvss::TransmissionSpec kSpec{kPolicy.scheme(), 2, rgvss::StackOp::kOr, rgvss::Pixel::kWhite};

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgvss::oracle::serial::monte_carlo_transmission(kPolicy, kSpec, trials, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trials));
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgvss::oracle::monte_carlo_transmission(kPolicy, kSpec, trials, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trials));
}

}  // namespace

BENCHMARK(BM_EncodeImageSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_EncodeImageParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_ReconstructSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ReconstructParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 20);
BENCHMARK(BM_MonteCarloParallel)->Arg(1 << 20);

BENCHMARK_MAIN();

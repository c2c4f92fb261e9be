#include <benchmark/benchmark.h>

#include "sdc/counting.hpp"
#include "sdc/galois_ring.hpp"
#include "sdc/group_ring.hpp"
#include "sdc/ideals.hpp"

namespace {

void BM_GaloisRingMultiply(benchmark::State& state) {
  const auto& ring = sdc::GaloisRing::get(2, 8, static_cast<unsigned>(state.range(0)));
  auto a = ring.teichmuller_generator() + ring.one();
  const auto b = ring.x() + ring.from_integer(3);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_GaloisRingMultiply)->Arg(2)->Arg(8)->Arg(32);

void BM_GroupRingMultiply(benchmark::State& state) {
  const sdc::GroupRing ring(sdc::GaloisRing::get(2, 2, 2),
                            sdc::AbelianGroup({static_cast<std::uint64_t>(state.range(0))}));
  const auto x = ring.basis(ring.group().element({1})) + ring.one();
  auto y = x;
  for (auto _ : state) {
    y = y * x;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_GroupRingMultiply)->Arg(8)->Arg(64)->Arg(256);

void BM_DecomposeRoundTrip(benchmark::State& state) {
  const sdc::GroupRing ring(sdc::GaloisRing::get(2, 2, 1),
                            sdc::AbelianGroup({static_cast<std::uint64_t>(state.range(0))}));
  const sdc::Decomposition dec(ring, sdc::Duality::Euclidean);
  const auto x = ring.basis(ring.group().element({1})) + ring.one();
  for (auto _ : state) {
    auto back = dec.compose(dec.decompose(x));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_DecomposeRoundTrip)->Arg(7)->Arg(15)->Arg(21);

void BM_EnumerateIdeals(benchmark::State& state) {
  const sdc::GroupRing ring(sdc::GaloisRing::get(2, 2, 1),
                            sdc::AbelianGroup({static_cast<std::uint64_t>(state.range(0))}));
  for (auto _ : state) {
    auto ideals = sdc::enumerate_ideals(ring);
    benchmark::DoNotOptimize(ideals);
  }
}
BENCHMARK(BM_EnumerateIdeals)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_NecLengthN(benchmark::State& state) {
  for (auto _ : state) {
    auto report = sdc::nec_length_n(2, 1, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_NecLengthN)->Arg(6)->Arg(1 << 10)->Arg(3 * 5 * 7 * 11 * 13);

}  // namespace
BENCHMARK_MAIN();

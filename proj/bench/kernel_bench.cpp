// Reference vs parallel matrix product over Z_{2^D} at the shapes the scheme uses.
#include <benchmark/benchmark.h>

#include "frodo_ue/kernels.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/sampling.hpp"

namespace {

using frodo_ue::kernels::GemmShape;

struct Operands {
  frodo_ue::MatrixZq a, b;
  std::vector<std::uint16_t> c;
};

Operands make(std::size_t m, std::size_t k, std::size_t n) {
  const auto& p = frodo_ue::load_paramset("frodo-640");
  frodo_ue::RngHandle rng("kernel-bench");
  Operands o{frodo_ue::sample_chi(rng, m, k, p), frodo_ue::sample_uniform(rng, k, n, p), {}};
  o.c.resize(m * n);
  return o;
}

template <void (*Gemm)(std::span<const std::uint16_t>, std::span<const std::uint16_t>, std::span<std::uint16_t>,
                       GemmShape, std::uint16_t)>
void run(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Operands o = make(m, k, n);
  for (auto _ : state) {
    Gemm(o.a.entries(), o.b.entries(), o.c, {m, k, n}, 0x7fff);
    benchmark::DoNotOptimize(o.c.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m * k * n));
}

// (m, k, n): encryption S'A, update Ord(C1) d1_a, token S1' A at n = 640.
void shapes(benchmark::internal::Benchmark* b) {
  b->Args({8, 640, 640})->Args({8, 9600, 640})->Args({1280, 640, 640});
}

}  // namespace

BENCHMARK(run<frodo_ue::kernels::reference::gemm>)->Name("gemm/reference")->Apply(shapes)->Unit(benchmark::kMillisecond);
BENCHMARK(run<frodo_ue::kernels::parallel::gemm>)->Name("gemm/parallel")->Apply(shapes)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

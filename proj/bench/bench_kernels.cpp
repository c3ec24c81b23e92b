// Serial reference vs OpenMP kernels on a band-sized grid.
#include <benchmark/benchmark.h>

#include "morseband/kernels.hpp"
#include "morseband/states.hpp"

using namespace morseband;

namespace {

struct Fixture {
  SampledState a;
  SampledState b;
  std::vector<Complex> out;
  explicit Fixture(int nx) {
    const PhysParams p;
    const GridSpec g = band_grid(p, nx, 64);
    a = states::wavefunction({1, 3}, p, g);
    b = states::wavefunction({1, 4}, p, g);
    out.resize(g.size());
  }
};

template <bool Parallel>
void BM_derivative_x(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    if constexpr (Parallel) {
      kernels::parallel::derivative_x(f.a.grid, f.a.values, f.out, 2);
    } else {
      kernels::serial::derivative_x(f.a.grid, f.a.values, f.out, 2);
    }
    benchmark::DoNotOptimize(f.out.data());
  }
}

template <bool Parallel>
void BM_derivative_y(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    if constexpr (Parallel) {
      kernels::parallel::derivative_y(f.a.grid, f.a.values, f.out, 1);
    } else {
      kernels::serial::derivative_y(f.a.grid, f.a.values, f.out, 1);
    }
    benchmark::DoNotOptimize(f.out.data());
  }
}

template <bool Parallel>
void BM_inner_product(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    Complex v = Parallel ? kernels::parallel::inner_product(f.a.grid, f.a.weight, f.a.values, f.b.values)
                         : kernels::serial::inner_product(f.a.grid, f.a.weight, f.a.values, f.b.values);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_derivative_x<false>)->Name("derivative_x/serial")->Arg(2048)->Arg(8192);
BENCHMARK(BM_derivative_x<true>)->Name("derivative_x/parallel")->Arg(2048)->Arg(8192)->UseRealTime();
BENCHMARK(BM_derivative_y<false>)->Name("derivative_y/serial")->Arg(2048)->Arg(8192);
BENCHMARK(BM_derivative_y<true>)->Name("derivative_y/parallel")->Arg(2048)->Arg(8192)->UseRealTime();
BENCHMARK(BM_inner_product<false>)->Name("inner_product/serial")->Arg(2048)->Arg(8192);
BENCHMARK(BM_inner_product<true>)->Name("inner_product/parallel")->Arg(2048)->Arg(8192)->UseRealTime();

BENCHMARK_MAIN();

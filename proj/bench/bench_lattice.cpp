#include <benchmark/benchmark.h>

#include "tornheim/numeric/lattice.hpp"

using namespace tornheim::numeric;

namespace {

const LatticeSpec kTornheim{{1, 0, 1}, {0, 1, 2}, {2, 3, 2}};
const LatticeSpec kG2{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 2}};

void run(benchmark::State& state, const LatticeSpec& spec, Execution exec) {
  const Precision prec{static_cast<int>(state.range(0)), 1e-10};
  PrecisionScope scope(prec.digits);
  lattice_sum(spec, prec, Execution::Serial);  // builds the cached quadrature rules
  for (auto _ : state) benchmark::DoNotOptimize(lattice_sum(spec, prec, exec));
}

void tornheim_serial(benchmark::State& s) { run(s, kTornheim, Execution::Serial); }
void tornheim_parallel(benchmark::State& s) { run(s, kTornheim, Execution::Parallel); }
void g2_serial(benchmark::State& s) { run(s, kG2, Execution::Serial); }
void g2_parallel(benchmark::State& s) { run(s, kG2, Execution::Parallel); }

}  // namespace

BENCHMARK(tornheim_serial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(tornheim_parallel)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(g2_serial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(g2_parallel)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

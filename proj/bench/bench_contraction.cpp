// OpenMP frontier kernel against the serial map-based reference.
#include <benchmark/benchmark.h>

#include "qlink/evaluator.hpp"
#include "qlink/homfly.hpp"
#include "qlink/random_diagram.hpp"

using namespace qlink;

namespace {

const DiagramMatrices& matrices(int n) {
  static const DiagramMatrices m2 = diagram_matrices(build_homfly(2));
  static const DiagramMatrices m4 = diagram_matrices(build_homfly(4));
  return n == 2 ? m2 : m4;
}

void BM_parallel(benchmark::State& st) {
  const MorseDiagram d = random_diagram(7, static_cast<int>(st.range(1)), true);
  const DiagramMatrices& m = matrices(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate(d, m));
}

void BM_serial(benchmark::State& st) {
  const MorseDiagram d = random_diagram(7, static_cast<int>(st.range(1)), true);
  const DiagramMatrices& m = matrices(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_serial(d, m));
}

}  // namespace

BENCHMARK(BM_parallel)->ArgsProduct({{2, 4}, {6, 14, 24}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial)->ArgsProduct({{2, 4}, {6, 14, 24}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

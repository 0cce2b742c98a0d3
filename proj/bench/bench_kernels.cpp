// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "shiftdc/json_io.hpp"
#include "shiftdc/props.hpp"
#include "shiftdc/scan.hpp"
#include "shiftdc/shift.hpp"

using namespace shiftdc;

namespace {

Exec exec_of(const benchmark::State &state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

const EStream &dense_stream() {
  static const EStream s = stream_from_json(read_json_file(std::string(SHIFTDC_DATA_DIR) + "/dense-singletons.json"));
  return s;
}

void BM_VerifyTrace(benchmark::State &state) {
  const ShiftTrace tr = run_shift_construction(dense_stream(), 20);
  for (auto _ : state) {
    const Report rep = verify_shift_trace(tr, dense_stream(), exec_of(state));
    benchmark::DoNotOptimize(rep.passed());
  }
}

void BM_ScanClosure(benchmark::State &state) {
  const NDSet e = NDSet::of_tail(GeomTail(Rational(0), Rational(1), Rational(1, 2)));
  // Closure-free interval between 1/4 and 1/2: the whole scan runs.
  const ClosedInterval iv(Rational(13, 48), Rational(23, 48));
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_closure(e, iv, 400, exec_of(state)));
}

void BM_Props(benchmark::State &state) {
  PropsOptions opts;
  opts.cases = 20;
  opts.exec = exec_of(state);
  opts.filter = "plmap";
  for (auto _ : state)
    benchmark::DoNotOptimize(run_properties(opts).total_failures());
}

} // namespace

BENCHMARK(BM_VerifyTrace)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanClosure)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Props)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "mhopf/derive.hpp"
#include "mhopf/gallery.hpp"
#include "mhopf/groupmodel.hpp"
#include "mhopf/pipeline.hpp"

using namespace mhopf;

namespace {

Instance cyclic(int n) { return gallery_instance("cyclic-" + std::to_string(n)); }

void BM_TensorSquareBuild(benchmark::State& state) {
  const Instance inst = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TensorSquare::build(inst.algebra));
  }
}
BENCHMARK(BM_TensorSquareBuild)->Arg(2)->Arg(4)->Arg(8);

void BM_CanonicalMaps(benchmark::State& state) {
  const Instance inst = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const CanonicalWhich which : {CanonicalWhich::t1, CanonicalWhich::t2,
                                       CanonicalWhich::t3, CanonicalWhich::t4}) {
      benchmark::DoNotOptimize(canonical_map(inst.coproduct, which));
    }
  }
}
BENCHMARK(BM_CanonicalMaps)->Arg(2)->Arg(4)->Arg(8);

void BM_DeriveStructure(benchmark::State& state) {
  const Instance inst = cyclic(static_cast<int>(state.range(0)));
  const auto t1 = canonical_map(inst.coproduct, CanonicalWhich::t1);
  const auto t4 = canonical_map(inst.coproduct, CanonicalWhich::t4);
  for (auto _ : state) {
    const Counit eps = derive_counit_left(inst.coproduct, t1);
    benchmark::DoNotOptimize(derive_antipode(inst.coproduct, eps, t1, t4));
  }
}
BENCHMARK(BM_DeriveStructure)->Arg(2)->Arg(4)->Arg(8);

void BM_FullPipeline(benchmark::State& state) {
  const Instance inst = cyclic(static_cast<int>(state.range(0)));
  PipelineOptions opts;
  opts.include_derived = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(inst, opts));
  }
}
BENCHMARK(BM_FullPipeline)->Arg(2)->Arg(4)->Arg(8);

void BM_RationalInvert(benchmark::State& state) {
  const Index n = static_cast<Index>(state.range(0));
  Matrix hilbert(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) hilbert.set(r, c, Rational(1, static_cast<long>(r + c + 1)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert(hilbert));
  }
}
BENCHMARK(BM_RationalInvert)->Arg(4)->Arg(16)->Arg(64);

void BM_WindowSuite(benchmark::State& state) {
  const OracleRef z = parse_group_spec("z");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_kg_window_suite(z, static_cast<Index>(state.range(0)), 20260814, 100));
  }
}
BENCHMARK(BM_WindowSuite)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();

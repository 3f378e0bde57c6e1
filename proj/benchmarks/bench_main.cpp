#include <benchmark/benchmark.h>

#include "rqn/catalog.hpp"
#include "rqn/double.hpp"

using namespace rqn;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load(RQN_BENCH_DATA_DIR);
  return c;
}

void BM_PolyMultiply(benchmark::State& state) {
  Poly a = Poly::parse("n1^2 + 3*n1*n2 - 1/2*n3 + n4*n5 - 7");
  Poly b = Poly::parse("n2^3 - n1*n3 + 2/3*n5^2 + n6");
  for (auto _ : state) benchmark::DoNotOptimize(a * b * a);
}
BENCHMARK(BM_PolyMultiply);

void BM_VerifyRqn(benchmark::State& state) {
  auto s = structure_from_json(cat().fixture("T2a.r4").doc, cat().resolver());
  for (auto _ : state) benchmark::DoNotOptimize(verify_rqn(s).pass());
}
BENCHMARK(BM_VerifyRqn);

void BM_CheckMybe(benchmark::State& state) {
  const auto& doc = cat().fixture("Ex2.J").doc;
  auto d = build_double(cat().algebra("A4_1"), bivector_from_json(doc.at("r"), 4));
  RMatrixJ J{matrix_from_json(doc.at("J"))};
  for (auto _ : state) benchmark::DoNotOptimize(check_mybe(d, J, Poly(-1)).pass());
}
BENCHMARK(BM_CheckMybe);

void BM_RunAllFixtures(benchmark::State& state) {
  auto ids = cat().fixture_ids();
  for (auto _ : state) benchmark::DoNotOptimize(run_fixtures(cat(), ids, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_RunAllFixtures)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "netconv/netconv.hpp"

using namespace netconv;

namespace {

ComplexMatrix random_matrix(int n, oracle::SampleRng& rng) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rng.box_complex();
    }
  }
  return m;
}

}  // namespace

static void BM_BuildP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PortNormalization norm = PortNormalization::uniform(n, Complex{50, 0});
  for (auto _ : state) {
    auto p = transform::build_p(Representation::Z, Representation::S, norm, {});
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BuildP)->Arg(2)->Arg(4)->Arg(8);

static void BM_Moebius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PortNormalization norm = PortNormalization::uniform(n, Complex{50, 0});
  const auto p = transform::build_p(Representation::Z, Representation::S, norm, {});
  oracle::SampleRng rng(1);
  const ComplexMatrix r = random_matrix(n, rng) * Complex{40.0, 0.0};
  for (auto _ : state) {
    auto out = transform::moebius(p, r);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Moebius)->Arg(2)->Arg(4)->Arg(8);

static void BM_ConvertSweep(benchmark::State& state) {
  oracle::SampleRng rng(2);
  const PortNormalization norm = PortNormalization::uniform(2, Complex{50, 0});
  NetworkSweep sweep;
  for (int i = 0; i < 201; ++i) {
    sweep.append(NetworkPoint(1e8 * (i + 1), Representation::Z,
                              random_matrix(2, rng) * Complex{40.0, 0.0}, norm));
  }
  for (auto _ : state) {
    auto out = transform::convert(sweep, Representation::S);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sweep.size()));
}
BENCHMARK(BM_ConvertSweep);

static void BM_OracleFit(benchmark::State& state) {
  oracle::SampleRng rng(3);
  const PortNormalization norm = PortNormalization::uniform(2, Complex{50, 0});
  const ComplexMatrix s = random_matrix(2, rng);
  const auto samples = oracle::sample_network(Representation::S, s, norm, {}, 4);
  for (auto _ : state) {
    auto fit = oracle::fit_representation(samples, Representation::Z, norm, {});
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_OracleFit);

static void BM_TouchstoneParse(benchmark::State& state) {
  oracle::SampleRng rng(5);
  const PortNormalization norm = PortNormalization::uniform(2, Complex{50, 0});
  NetworkSweep sweep;
  for (int i = 0; i < 401; ++i) {
    sweep.append(NetworkPoint(1e8 * (i + 1), Representation::S,
                              random_matrix(2, rng), norm));
  }
  touchstone::TouchstoneOptions options;
  options.format = touchstone::NumberFormat::RI;
  const std::string text = touchstone::write(sweep, options);
  for (auto _ : state) {
    auto parsed = touchstone::parse(text, 2);
    benchmark::DoNotOptimize(parsed);
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_TouchstoneParse);

BENCHMARK_MAIN();

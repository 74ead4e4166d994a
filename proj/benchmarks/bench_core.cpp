#include <benchmark/benchmark.h>

#include <random>

#include "kspec/corpus.hpp"
#include "kspec/pipeline.hpp"

using namespace kspec;

namespace {

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-20, 20);
  std::bernoulli_distribution keep(density);
  SparseMatrix a(static_cast<std::uint32_t>(rows), static_cast<std::uint32_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) a.set(i, j, val(rng));
  return a;
}

const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return e;
  throw std::out_of_range(name);
}

}  // namespace

static void BM_RankExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_sparse(n, n, 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankExact)->Arg(40)->Arg(80)->Arg(160);

static void BM_RankModular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_sparse(n, n, 0.1, 1);
  const auto p = random_prime(0);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod(a, p));
}
BENCHMARK(BM_RankModular)->Arg(40)->Arg(80)->Arg(160);

static void BM_KoszulTables(benchmark::State& state) {
  const auto f = parse_poly("x^2*y^2 + x^2*z^2 + y^2*z^2 + w^4", split_vars("x,y,z,w"));
  for (auto _ : state) {
    KoszulWindow w(f);
    Cohomology<ModArith> coh(w, ModArith(random_prime(0)));
    for (int k = 0; k <= w.k_max(); ++k) {
      benchmark::DoNotOptimize(coh.mu(k));
      benchmark::DoNotOptimize(coh.nu(k));
    }
  }
}
BENCHMARK(BM_KoszulTables)->Unit(benchmark::kMillisecond);

static void BM_Pipeline(benchmark::State& state, const std::string& name, ArithMode arith) {
  const auto& e = entry(name);
  const auto f = parse_poly(e.poly, split_vars(e.vars));
  PipelineOptions opt;
  opt.arith = arith;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(f, opt).spectral->spectrum.valid_top);
}
BENCHMARK_CAPTURE(BM_Pipeline, xyz_exact, "xyz", ArithMode::Exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, xyz_auto, "xyz", ArithMode::Auto)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, x2y2z4_exact, "x2y2+z4", ArithMode::Exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, x2y2z4_auto, "x2y2+z4", ArithMode::Auto)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, nonwh_auto, "x4z+y5+x2y3", ArithMode::Auto)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pipeline, cayley_auto, "cayley cubic", ArithMode::Auto)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

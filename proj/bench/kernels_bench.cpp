// Serial reference against the OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include <random>

#include "branchcount/kernels.hpp"
#include "branchcount/local_algebra.hpp"
#include "branchcount/parse.hpp"

using namespace branchcount;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

// Random symmetric integer matrix with entries in [-9, 9].
std::vector<std::vector<Rational>> symmetric(std::size_t n) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  }
  return m;
}

const Ring kXY{"x", "y"};

void BM_inertia(benchmark::State& state) {
  const auto m = symmetric(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(congruence_inertia(m, mode(state)));
}
BENCHMARK(BM_inertia)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);

void BM_normal_forms(benchmark::State& state) {
  const std::vector<Polynomial> F{parse_polynomial("x^5 - 3*x^2*y^2 + y^7", kXY),
                                  parse_polynomial("x*y^3 + 2*x^4 - y^6", kXY)};
  const auto sb = standard_basis(2, F);
  std::vector<Polynomial> inputs;
  for (unsigned a = 0; a < 12; ++a) {
    for (unsigned b = 0; b < 12; ++b) inputs.push_back(Polynomial::monomial(ExponentVector{a, b}));
  }
  for (auto _ : state) benchmark::DoNotOptimize(batch_normal_forms(inputs, sb, mode(state)));
}
BENCHMARK(BM_normal_forms)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

void BM_sample_circle(benchmark::State& state) {
  const std::vector<Polynomial> F{parse_polynomial("x^3 - 3*x*y^2 + y^5", kXY),
                                  parse_polynomial("3*x^2*y - y^3 + x^4", kXY)};
  for (auto _ : state) benchmark::DoNotOptimize(sample_circle(F, 0.01, 1 << 16, mode(state)));
}
BENCHMARK(BM_sample_circle)->ArgsProduct({{0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "octqft/catalog.hpp"
#include "octqft/statesum.hpp"

using namespace octqft;

namespace {

const FieldSpec QQ = FieldSpec::rational();

SparseTensor random_tensor(std::vector<Leg> legs, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<long> v(1, 9);
  SparseTensor t(QQ, legs);
  for (std::uint64_t k = 0; k < t.volume(); ++k)
    if (u(rng) < density) t.add(k, Scalar(QQ, v(rng), v(rng)));
  t.normalize();
  return t;
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> v(-9, 9);
  Matrix m(QQ, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(QQ, v(rng), 1 + (v(rng) + 9) % 4);
  return m;
}

void BM_contract_pair(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto a = random_tensor({{0, d}, {1, d}, {2, d}}, 0.5, 1);
  const auto b = random_tensor({{2, d}, {1, d}, {3, d}}, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contract_pair(a, b));
}

void BM_contract_pair_reference(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const auto a = random_tensor({{0, d}, {1, d}, {2, d}}, 0.5, 1);
  const auto b = random_tensor({{2, d}, {1, d}, {3, d}}, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contract_pair_reference(a, b));
}

void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 3), b = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_multiply_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 3), b = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_parallel(a, b));
}

void BM_state_sum_genus2(benchmark::State& state) {
  const auto c = matrix_direct_sum(QQ, {2, 3}, {Scalar(QQ, 1), Scalar(QQ, 2)});
  const auto cx = closed_surface(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_closed(c.frobenius, cx));
}

}  // namespace

BENCHMARK(BM_contract_pair)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_contract_pair_reference)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_multiply)->Arg(32)->Arg(64);
BENCHMARK(BM_multiply_parallel)->Arg(32)->Arg(64);
BENCHMARK(BM_state_sum_genus2)->Arg(0)->Arg(2);

BENCHMARK_MAIN();

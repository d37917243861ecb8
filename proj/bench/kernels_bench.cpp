#include "spinprod/clifford/gamma.hpp"
#include "spinprod/exact/matrix.hpp"
#include "spinprod/graded/product.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace spinprod;
using exact::GaussianRational;
using exact::Matrix;

namespace {

Matrix dense_random(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = GaussianRational(exact::Rational(num(rng), den(rng)));
    return m;
}

void BM_MatMulSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = dense_random(n, 1);
    const Matrix b = dense_random(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact::serial::mat_mul(a, b));
}

void BM_MatMulParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = dense_random(n, 1);
    const Matrix b = dense_random(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact::mat_mul(a, b));
}

void BM_RelationSerial(benchmark::State& state) {
    const std::vector<int> dims{static_cast<int>(state.range(0)), 3};
    const auto pm = graded::build_product(std::span<const int>(dims));
    const Matrix metric = pm.metric();
    for (auto _ : state) benchmark::DoNotOptimize(clifford::serial::first_relation_failure(pm.gamma_total, metric));
}

void BM_RelationParallel(benchmark::State& state) {
    const std::vector<int> dims{static_cast<int>(state.range(0)), 3};
    const auto pm = graded::build_product(std::span<const int>(dims));
    const Matrix metric = pm.metric();
    for (auto _ : state) benchmark::DoNotOptimize(clifford::first_relation_failure(pm.gamma_total, metric));
}

}  // namespace

BENCHMARK(BM_MatMulSerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_MatMulParallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RelationSerial)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_RelationParallel)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();

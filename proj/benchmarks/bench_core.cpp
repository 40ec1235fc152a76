#include "naqm/brackets.hpp"
#include "naqm/dynamics.hpp"
#include "naqm/expr.hpp"
#include "naqm/verification.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

using namespace naqm;
using algebra::AlgebraElement;
using algebra::BasisUnit;
using algebra::Complex;

namespace {

AlgebraElement dense_element(unsigned seed) {
    std::mt19937 rng{seed};
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    AlgebraElement x;
    for (BasisUnit u : algebra::kAllUnits)
        x = x + AlgebraElement::scaled_unit(Complex{dist(rng), dist(rng)}, u);
    return x;
}

void BM_BasisProductSweep(benchmark::State& state) {
    for (auto _ : state) {
        int sign_sum = 0;
        for (BasisUnit a : algebra::kAllUnits)
            for (BasisUnit b : algebra::kAllUnits)
                sign_sum += algebra::basis_product(a, b).sign;
        benchmark::DoNotOptimize(sign_sum);
    }
}
BENCHMARK(BM_BasisProductSweep);

void BM_DenseMultiply(benchmark::State& state) {
    const AlgebraElement x = dense_element(1);
    const AlgebraElement y = dense_element(2);
    for (auto _ : state) {
        AlgebraElement z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_DenseMultiply);

void BM_TernaryBracket(benchmark::State& state) {
    const AlgebraElement a = dense_element(3);
    const AlgebraElement b = dense_element(4);
    const AlgebraElement c = dense_element(5);
    for (auto _ : state) {
        AlgebraElement out = brackets::na_bracket(a, b, c);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_TernaryBracket);

void BM_TableFidelitySuite(benchmark::State& state) {
    for (auto _ : state) {
        auto report = verification::run_suite(verification::SuiteId::TableFidelity);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_TableFidelitySuite);

void BM_RunAllSuites(benchmark::State& state) {
    for (auto _ : state) {
        auto reports = verification::run_all();
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_RunAllSuites);

void BM_Rk4RotationPeriod(benchmark::State& state) {
    dynamics::FieldConfig field;
    for (auto _ : state) {
        auto trajectory = dynamics::integrate(dynamics::SpinModel::NonAssociative,
                                              {{1.0, 0.0, 0.0}}, field,
                                              2.0 * std::numbers::pi, 1e-3);
        benchmark::DoNotOptimize(trajectory);
    }
}
BENCHMARK(BM_Rk4RotationPeriod);

void BM_ParseAndEvaluate(benchmark::State& state) {
    const std::string text = "[i4, e5, i2] + comm(i1, i2)*e3 - (2 - 3I)*[i4, i5, (i2 + i3)]";
    for (auto _ : state) {
        auto value = expr::evaluate(*expr::parse(text).expr);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_ParseAndEvaluate);

}  // namespace

BENCHMARK_MAIN();

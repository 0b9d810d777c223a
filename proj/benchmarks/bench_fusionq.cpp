#include <benchmark/benchmark.h>

#include "fusionq/repr.hpp"

using namespace fusionq;

namespace {

const BigRational kQ0(mpz_class(6), mpz_class(5));

Partition shape_arg(int which) {
    static const std::vector<Partition> shapes{Partition({2, 1}), Partition({2, 2}), Partition({3, 2}),
                                               Partition({3, 2, 1}), Partition({3, 3, 1}), Partition({3, 3, 2})};
    return shapes[static_cast<std::size_t>(which)];
}

FusionSpec hook_spec(const Partition& p) { return {hook_tableau(p), Grouping::hook, {}}; }

void BM_HeckeMulSymbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HeckeQ h = symbolic_algebra(n);
    const ElementQ x = evaluate_F(hook_spec(Partition({n - 1, 1}))).element;
    const ElementQ y = h.t_sigma(longest_element(n));
    for (auto _ : state) benchmark::DoNotOptimize(h.mul(x, y));
}
BENCHMARK(BM_HeckeMulSymbolic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ClearedProductLaurent(benchmark::State& state) {
    const FusionSpec spec = hook_spec(shape_arg(static_cast<int>(state.range(0))));
    const auto f = f_factors(line_args(spec));
    const int n = spec.tableau.size();
    for (auto _ : state) benchmark::DoNotOptimize(cleared_product(n, f, 2, LaurentRing{}));
    state.SetLabel(spec.tableau.shape().to_string());
}
BENCHMARK(BM_ClearedProductLaurent)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ClearedProductInteger(benchmark::State& state) {
    const FusionSpec spec = hook_spec(shape_arg(static_cast<int>(state.range(0))));
    const auto f = f_factors(line_args(spec));
    const int n = spec.tableau.size();
    const IntegerRing ring(kQ0);
    for (auto _ : state) benchmark::DoNotOptimize(cleared_product(n, f, 3, ring));
    state.SetLabel(spec.tableau.shape().to_string());
}
BENCHMARK(BM_ClearedProductInteger)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_EvaluateFSymbolic(benchmark::State& state) {
    const FusionSpec spec = hook_spec(shape_arg(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_F(spec));
    state.SetLabel(spec.tableau.shape().to_string());
}
BENCHMARK(BM_EvaluateFSymbolic)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_EvaluateFNumeric(benchmark::State& state) {
    const FusionSpec spec = hook_spec(shape_arg(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_F(spec, EvalMode::at(kQ0)));
    state.SetLabel(spec.tableau.shape().to_string());
}
BENCHMARK(BM_EvaluateFNumeric)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_EvaluateFGeneric(benchmark::State& state) {
    const FusionSpec spec = hook_spec(shape_arg(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_F_generic(spec));
    state.SetLabel(spec.tableau.shape().to_string());
}
BENCHMARK(BM_EvaluateFGeneric)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_IdealDimensionNumeric(benchmark::State& state) {
    const Partition p = shape_arg(static_cast<int>(state.range(0)));
    const ElementQ f = evaluate_F(hook_spec(p), EvalMode::at(kQ0)).element;
    for (auto _ : state) benchmark::DoNotOptimize(ideal_dimension(f, EvalMode::at(kQ0)));
    state.SetLabel(p.to_string());
}
BENCHMARK(BM_IdealDimensionNumeric)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

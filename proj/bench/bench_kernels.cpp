// Serial vs OpenMP-parallel kernel comparison: pointwise interpolant
// evaluation and the fine-grid error scan.

#include <benchmark/benchmark.h>

#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/convergence.hpp"
#include "fcgram/trig.hpp"

namespace {

using namespace fcgram;

struct Fixture {
    TestFunction f = make_function("osc54");
    TrigInterpolant t;
    std::vector<double> xs;

    Fixture() {
        const int n = 512;
        const FcParams params = params_from_b(n, 5, Rational(2));
        std::vector<double> samples(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            samples[static_cast<std::size_t>(j)] = f.eval(static_cast<double>(j) / n);
        t = fit(continue_samples(samples, params));
        xs.resize(20001);
        for (std::size_t i = 0; i < xs.size(); ++i)
            xs[i] = static_cast<double>(i) / (xs.size() - 1);
    }
};

Fixture& fixture() {
    static Fixture fx;
    return fx;
}

void BM_PointwiseEval(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
    auto& fx = fixture();
    for (auto _ : state) {
        auto out = eval_points(fx.t, fx.xs, exec);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_ErrorScan(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
    auto& fx = fixture();
    for (auto _ : state) {
        double e = relative_error(fx.f, fx.t, 32768, exec);
        benchmark::DoNotOptimize(e);
    }
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

BENCHMARK(BM_PointwiseEval)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErrorScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

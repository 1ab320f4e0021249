#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "stripvortex/contour_dynamics.hpp"
#include "stripvortex/evolution.hpp"
#include "stripvortex/geometry.hpp"
#include "stripvortex/kernels.hpp"
#include "stripvortex/quadrature.hpp"

namespace {

using namespace stripvortex;

PatchSystem circle_system(int n, double r = 0.15, double omega0 = 2.0 * std::numbers::pi) {
    std::vector<Vec2> nodes(n);
    for (int j = 0; j < n; ++j) {
        const double a = 2.0 * std::numbers::pi * j / n;
        nodes[j] = {r * std::cos(a), r * std::sin(a)};
    }
    PatchSystem s;
    s.contours.push_back(validate_contour(std::move(nodes), {0.0, 0.0}));
    s.omega0 = omega0;
    return s;
}

void BM_KInf(benchmark::State& state) {
    Vec2 d{0.2, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(k_inf(d));
    }
}
BENCHMARK(BM_KInf);

void BM_GradKInf(benchmark::State& state) {
    Vec2 d{0.2, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grad_k_inf(d));
    }
}
BENCHMARK(BM_GradKInf);

void BM_LogKernelWeights(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_kernel_weights(n));
    }
}
BENCHMARK(BM_LogKernelWeights)->Arg(128)->Arg(256);

void BM_CdeRhs(benchmark::State& state) {
    const PatchSystem s = circle_system(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cde_rhs(s));
    }
}
BENCHMARK(BM_CdeRhs)->Arg(128)->Arg(256);

void BM_Rk4Step(benchmark::State& state) {
    const PatchSystem s = circle_system(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rk4_step(s, 1e-3));
    }
}
BENCHMARK(BM_Rk4Step)->Arg(128);

void BM_VelocityGradient(benchmark::State& state) {
    const PatchSystem s = circle_system(128);
    const StripPoint x(0.0, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(velocity_gradient(s, x));
    }
}
BENCHMARK(BM_VelocityGradient);

} // namespace

BENCHMARK_MAIN();

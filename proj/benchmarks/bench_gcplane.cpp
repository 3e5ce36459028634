#include <benchmark/benchmark.h>

#include <cmath>

#include "gcplane/bobillier.hpp"
#include "gcplane/verify.hpp"

using namespace gcp;

namespace {

const PlaneParam kPlanes[3] = {PlaneParam{-1.0}, PlaneParam{0.0}, PlaneParam{1.0}};

MotionSpec bench_motion(double p) {
    std::vector<double> tx{-0.3, 1.0, 0.1};
    if (p == 0.0) tx.resize(1);
    return MotionSpec(PlaneParam{p}, Poly({-0.1, 1.1, 0, 0.1}), Poly(tx),
                      Poly({-0.2, 0.3, 0.1}));
}

void BM_ptrig_kernel(benchmark::State& state) {
    const PlaneParam pl = kPlanes[state.range(0)];
    double th = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosp(th, pl));
        benchmark::DoNotOptimize(sinp(th, pl));
        th += 1e-6;
    }
}
BENCHMARK(BM_ptrig_kernel)->Arg(0)->Arg(1)->Arg(2);

void BM_mul_norm(benchmark::State& state) {
    const PlaneParam pl = kPlanes[state.range(0)];
    GCNum a{1.2, -0.7}, b{0.4, 0.9};
    for (auto _ : state) {
        const GCNum c = mul(a, b, pl);
        benchmark::DoNotOptimize(norm(c, pl));
        a.x += 1e-9;
    }
}
BENCHMARK(BM_mul_norm)->Arg(0)->Arg(1)->Arg(2);

void BM_polar_roundtrip(benchmark::State& state) {
    const PlaneParam pl = kPlanes[state.range(0)];
    GCNum z{1.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(from_polar(to_polar(z, pl), pl));
        z.x += 1e-9;
    }
}
BENCHMARK(BM_polar_roundtrip)->Arg(0)->Arg(1)->Arg(2);

void BM_instant_invariants(benchmark::State& state) {
    const MotionSpec m = bench_motion(state.range(0) == 0 ? -1.0 : (state.range(0) == 1 ? 0.0 : 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(instant_invariants(m, 0.0));
}
BENCHMARK(BM_instant_invariants)->Arg(0)->Arg(1)->Arg(2);

void BM_bobillier_kinematic_check(benchmark::State& state) {
    const MotionSpec m = bench_motion(-1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bobillier_kinematic_check(m, 0.0, {0.3, -0.4, 0.7}));
}
BENCHMARK(BM_bobillier_kinematic_check);

void BM_verify_small(benchmark::State& state) {
    VerifyOptions opts;
    opts.p_values = {-1.0, 0.0, 1.0};
    opts.cases = 100;
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(opts));
}
BENCHMARK(BM_verify_small);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "twistor/hermitian.hpp"
#include "twistor/indicatrix.hpp"
#include "twistor/lift.hpp"
#include "twistor/verify.hpp"

using namespace twistor;

static void BM_QuaternionMul(benchmark::State& state) {
    Rng rng(1);
    const Quaternion p = rng.quaternion(), q = rng.quaternion();
    for (auto _ : state) {
        Quaternion r = p * q;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_QuaternionMul);

static void BM_StructureFromQuaternion(benchmark::State& state) {
    Rng rng(2);
    const Quaternion q = rng.unit_quaternion();
    for (auto _ : state) {
        HermitianStructure j = structure_from_quaternion(q);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_StructureFromQuaternion);

static void BM_TwistorProject(benchmark::State& state) {
    Rng rng(3);
    Vec4c z;
    for (int i = 0; i < 4; ++i) z[i] = rng.complex_gaussian();
    const ProjectivePoint p(z);
    for (auto _ : state) {
        SpherePoint x = twistor_project(p);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_TwistorProject);

static void BM_TwistorStructure(benchmark::State& state) {
    Rng rng(4);
    Vec4c z;
    for (int i = 0; i < 4; ++i) z[i] = rng.complex_gaussian();
    const ProjectivePoint p(z);
    for (auto _ : state) {
        TangentStructure t = twistor_structure(p);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TwistorStructure);

static void BM_CircleFit(benchmark::State& state) {
    std::vector<Vec2> pts;
    for (int k = 0; k < 64; ++k) {
        const double t = 2 * M_PI * k / 64;
        pts.emplace_back(1.5 + 2 * std::cos(t), -0.5 + 2 * std::sin(t));
    }
    for (auto _ : state) {
        CircleFit f = fit_circle(pts);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_CircleFit);

static void BM_SurfaceJet(benchmark::State& state) {
    static const auto curves = reference_curves();
    const ParamSurface s = project_curve(curves[0].second, Rect2{-1.2, 1.2, -1.2, 1.2});
    const DiffConfig cfg;
    for (auto _ : state) {
        SurfaceJet jet = differentiate(s, Vec2(0.3, 0.2), cfg);
        benchmark::DoNotOptimize(jet);
    }
}
BENCHMARK(BM_SurfaceJet);

static void BM_TwistorLift(benchmark::State& state) {
    static const auto curves = reference_curves();
    const ParamSurface s = project_curve(curves[0].second, Rect2{-1.2, 1.2, -1.2, 1.2});
    const DiffConfig cfg;
    for (auto _ : state) {
        LiftResult lift = twistor_lift(s, Vec2(0.3, 0.2), kCalibratedLiftSign, cfg);
        benchmark::DoNotOptimize(lift);
    }
}
BENCHMARK(BM_TwistorLift);

BENCHMARK_MAIN();

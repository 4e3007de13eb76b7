// Hot-path timings: field evaluation, solid-angle fan, adaptive circulation,
// and the integrator step. Run manually; not part of the test suite.
#include <benchmark/benchmark.h>

#include <random>

#include "monopole/dynamics.hpp"
#include "monopole/fields.hpp"
#include "monopole/loops.hpp"
#include "monopole/phases.hpp"
#include "monopole/setup.hpp"

namespace {

using monopole::Vec3;

void BM_StringMomentum(benchmark::State& state) {
  const auto setup = monopole::PhysicalSetup::quantized(2);
  const auto string = monopole::StringConfig::magnetic_along(-Vec3::UnitZ());
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vec3 r(1.0, 0.2, 0.4);
  for (auto _ : state) {
    r.x() = 1.0 + 0.01 * d(rng);
    benchmark::DoNotOptimize(monopole::string_momentum(r, setup, string));
  }
}
BENCHMARK(BM_StringMomentum);

void BM_SolidAngle(benchmark::State& state) {
  const auto path = monopole::ClosedPath::cap(
      1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(monopole::solid_angle(path));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolidAngle)->RangeMultiplier(8)->Range(64, 32768)->Complexity();

void BM_LoopCirculation(benchmark::State& state) {
  const auto setup = monopole::PhysicalSetup::quantized(1);
  const auto string = monopole::StringConfig::magnetic_along(-Vec3::UnitZ());
  const auto path = monopole::ClosedPath::cap(
      1.0, static_cast<int>(state.range(0)));
  const monopole::VectorField field = [&](const Vec3& r) {
    return monopole::string_momentum(r, setup, string);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(monopole::line_integral(field, path, 1e-10));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LoopCirculation)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_IntegratorStep(benchmark::State& state) {
  const auto setup = monopole::PhysicalSetup::quantized(1);
  const auto spec = monopole::IntegratorSpec::defaults_for(1.0);
  monopole::ParticleState particle{Vec3(1.0, 0.0, 0.0), Vec3(0.0, 0.5, 0.0), 0.0};
  for (auto _ : state) {
    particle = monopole::step(particle, setup, spec);
    benchmark::DoNotOptimize(particle);
  }
}
BENCHMARK(BM_IntegratorStep);

void BM_Type2Phase(benchmark::State& state) {
  const auto setup = monopole::PhysicalSetup::quantized(2);
  const auto string = monopole::StringConfig::magnetic_along(-Vec3::UnitZ());
  const auto path = monopole::ClosedPath::cap(1.0, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monopole::type2_phase(path, setup, string, 1e-6));
  }
}
BENCHMARK(BM_Type2Phase);

}  // namespace

BENCHMARK_MAIN();

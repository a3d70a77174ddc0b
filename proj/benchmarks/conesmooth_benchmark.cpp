// Copyright 2026 The Conesmooth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "conesmooth/assemble.h"
#include "conesmooth/certify.h"
#include "conesmooth/cone.h"
#include "conesmooth/kernel.h"
#include "conesmooth/mesh.h"
#include "test_meshes.h"

namespace {

using namespace conesmooth;
namespace meshes = conesmooth::testing;

void BM_ParseSurface(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto d = meshes::RandomSphere(rng, static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(PolyhedralSurface::FromDescription(d));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(d.faces.size()));
}
BENCHMARK(BM_ParseSurface)->DenseRange(1, 4);

void BM_ConeAngles(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto s = PolyhedralSurface::FromDescription(meshes::RandomSphere(rng, 3, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(TotalAngleDefect(s));
}
BENCHMARK(BM_ConeAngles);

void BM_KernelJet(benchmark::State& state) {
  const auto k = SmoothingKernel::Standard();
  double t = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.Evaluate(t));
    t = t < 0.999 ? t + 0.001 : 0.001;
  }
}
BENCHMARK(BM_KernelJet);

void BM_CertifyKernel(benchmark::State& state) {
  const auto k = SmoothingKernel::Standard();
  for (auto _ : state) benchmark::DoNotOptimize(CertifyKernel(k, 1e-5));
}
BENCHMARK(BM_CertifyKernel)->Unit(benchmark::kMillisecond);

void BM_TotalCurvature(benchmark::State& state) {
  const SmoothedCone cone(std::numbers::pi, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(TotalCurvature(cone, 1e-8));
}
BENCHMARK(BM_TotalCurvature)->Unit(benchmark::kMicrosecond);

void BM_SampledCurvatureSup(benchmark::State& state) {
  const SmoothedCone cone(std::numbers::pi, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(SampledCurvatureSup(cone, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampledCurvatureSup)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_MinimalM(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto s = PolyhedralSurface::FromDescription(meshes::RandomSphere(rng, static_cast<int>(state.range(0)), 0.2));
  for (auto _ : state) benchmark::DoNotOptimize(MinimalM(s, CertificationMode::kQuasiconformal));
}
BENCHMARK(BM_MinimalM)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_GlobalVerification(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto smoothed = SmoothSurface(PolyhedralSurface::FromDescription(meshes::RandomSphere(rng, 1, 0.1)));
  for (auto _ : state) benchmark::DoNotOptimize(GlobalVerification(smoothed));
}
BENCHMARK(BM_GlobalVerification)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

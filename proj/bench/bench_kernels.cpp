/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Serial reference against OpenMP kernel for each parallel path.
// Arg(0) runs Exec::serial, Arg(1) Exec::parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "supersep/combine.hpp"
#include "supersep/optics.hpp"
#include "supersep/schmudgen.hpp"

namespace so = supersep::optics;
namespace sc = supersep::combine;
namespace ss = supersep::schmudgen;
using supersep::Exec;

namespace {

Exec exec_of(const benchmark::State& st) {
  return st.range(0) ? Exec::parallel : Exec::serial;
}

void label(benchmark::State& st) {
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}

const so::SlitSystem kTriple{3, 0.2e-3, 1e-3, 0.0};
const so::BeamGeometry kBeam{100e-9, 1.8, 1.0};

sc::InterferometerLayout layout(std::size_t n) {
  return sc::canonical_layout(
      0.2e-3, 1e-3, 100e-9, 1.8,
      sc::superseparable_window(0.2e-3, 1e-3, 100e-9, 1.8), n);
}

ss::GridField random_bump() {
  auto f = ss::make_bump(0.1, -0.2, 3.0);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  for (auto& v : f.values()) v *= std::complex<double>(n(rng), n(rng));
  return f;
}

void BM_SampleIntensity(benchmark::State& st) {
  const so::Window w{-3e-3, 3e-3};
  for (auto _ : st)
    benchmark::DoNotOptimize(
        so::sample_intensity(kTriple, kBeam, w, 1 << 16, exec_of(st)));
  label(st);
}

void BM_SampleAmplitude(benchmark::State& st) {
  const so::Window w{-3e-3, 3e-3};
  for (auto _ : st)
    benchmark::DoNotOptimize(
        so::sample_amplitude(kTriple, kBeam, w, 1 << 16, exec_of(st)));
  label(st);
}

void BM_CombineIncoherent(benchmark::State& st) {
  const auto l = layout(1 << 16);
  for (auto _ : st)
    benchmark::DoNotOptimize(sc::combine_incoherent(l, exec_of(st)));
  label(st);
}

void BM_CombineCoherentExactPath(benchmark::State& st) {
  const auto l = layout(1 << 16);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        sc::combine_coherent(l, sc::CoherentModel::exact_path, exec_of(st)));
  label(st);
}

void BM_ApplyU(benchmark::State& st) {
  const auto f = random_bump();
  for (auto _ : st)
    benchmark::DoNotOptimize(ss::apply_U(8 * f.spacing(), f, exec_of(st)));
  label(st);
}

void BM_ApplyV(benchmark::State& st) {
  const auto f = random_bump();
  const auto z = ss::PhaseZ::from_angle(1.1);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        ss::apply_V(8 * f.spacing(), z, f, exec_of(st)));
  label(st);
}

void BM_WeylDefect(benchmark::State& st) {
  const auto f = random_bump();
  const auto z = ss::PhaseZ::from_angle(1.1);
  const double h = f.spacing();
  for (auto _ : st)
    benchmark::DoNotOptimize(
        ss::weyl_defect(8 * h, 8 * h, z, f, exec_of(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_SampleIntensity)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleAmplitude)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CombineIncoherent)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CombineCoherentExactPath)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApplyU)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApplyV)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WeylDefect)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

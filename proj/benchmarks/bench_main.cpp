// SPDX-License-Identifier: Apache-2.0
//
// iasim: mmWave vehicle-to-vehicle initial access simulator
// Copyright (C) 2026 The iasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <random>

#include "iasim/codebook_design.hpp"
#include "iasim/ia.hpp"

using namespace iasim;

namespace {

const ArrayGeometry kGeom = ArrayGeometry::standard(28.0);

std::vector<PathComponent> random_paths(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> ang(0, kTwoPi), mag(1e-7, 1e-5);
  std::vector<PathComponent> paths(static_cast<std::size_t>(n));
  for (auto& p : paths) {
    p.aod_az = ang(rng);
    p.aoa_az = ang(rng);
    p.amplitude = std::polar(mag(rng), ang(rng));
  }
  return paths;
}

void BM_AssembleChannel(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto paths = random_paths(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_channel(paths, kGeom));
}
BENCHMARK(BM_AssembleChannel)->Arg(1)->Arg(4);

void BM_GainTable(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const ChannelMatrix h = assemble_channel(random_paths(rng, 3), kGeom);
  const Codebook cb = uniform_codebook(kGeom, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_gain_table(h, cb, cb));
}
BENCHMARK(BM_GainTable)->Arg(18)->Arg(64);

void BM_SvdOracle(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const ChannelMatrix h = assemble_channel(random_paths(rng, 3), kGeom);
  for (auto _ : state) benchmark::DoNotOptimize(svd_oracle(h).sigma1);
}
BENCHMARK(BM_SvdOracle);

void BM_EnumeratePaths(benchmark::State& state) {
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::crossroad);
  p.duration = 0.1;
  const Scenario s = generate_synthetic_scenario(ScenarioKind::crossroad, p);
  const Pose tx = make_pose(-1.75, -60, 0, 10), rx = make_pose(40, 1.75, kPi / 2, 10);
  const PropagationConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(s.map, tx, rx, cfg));
}
BENCHMARK(BM_EnumeratePaths);

void BM_MapAnglePdf(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  RasterImage img(n, n, 0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if ((x / 32 + y / 32) % 2 == 0) img.at(x, y) = 255;
  for (auto _ : state) benchmark::DoNotOptimize(map_angle_pdf(img));
}
BENCHMARK(BM_MapAnglePdf)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_LloydMax(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> w(360);
  for (auto& x : w) x = u(rng) * u(rng);
  const AngularPdf pdf = AngularPdf::full_circle(w);
  for (auto _ : state) benchmark::DoNotOptimize(lloyd_max(pdf, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LloydMax)->Arg(18)->Arg(72);

}  // namespace
BENCHMARK_MAIN();

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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "iasim/metrics.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace iasim;
using oracle::cd;
using oracle::pi;

namespace {

const ArrayGeometry kGeom = ArrayGeometry::standard(28.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

QuantizationLink rank1_link(double aod, double aoa, double mag, double phase = 0.0) {
  PathComponent p;
  p.aod_az = aod;
  p.aoa_az = aoa;
  p.amplitude = std::polar(mag, phase);
  return {assemble_channel({p}, kGeom)};
}

QuantizationLink multipath_link(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0, 2 * pi), mag(1e-7, 1e-5);
  std::uniform_int_distribution<int> np(1, 4);
  std::vector<PathComponent> paths(static_cast<std::size_t>(np(rng)));
  for (auto& p : paths) {
    p.aod_az = ang(rng);
    p.aoa_az = ang(rng);
    p.amplitude = std::polar(mag(rng), ang(rng));
  }
  return {assemble_channel(paths, kGeom)};
}

QuantizationSweepParams params() {
  QuantizationSweepParams p;
  p.geom = kGeom;
  return p;
}

}  // namespace

TEST_CASE("ecdf examples") {
  const Ecdf a = ecdf(std::vector<int>{5, 5, 5});
  CHECK(a.support() == std::vector<double>{5});
  CHECK(a.cum_prob() == std::vector<double>{1.0});

  const Ecdf b = ecdf(std::vector<int>{1, 2, 3, 4});
  CHECK(b.support() == std::vector<double>{1, 2, 3, 4});
  CHECK(b.cum_prob() == std::vector<double>{0.25, 0.5, 0.75, 1.0});
  CHECK(b(0.5) == 0.0);
  CHECK(b(2.5) == 0.5);
  CHECK(b(10) == 1.0);

  std::vector<int> k(64);
  std::iota(k.begin(), k.end(), 1);
  const double m = ecdf(k).median();
  CHECK((m == 32 || m == 33));

  CHECK_THROWS(ecdf(std::vector<double>{}));
  CHECK_THROWS(Ecdf({1, 1}, {0.5, 1.0}));
  CHECK_THROWS(Ecdf({1, 2}, {0.5, 0.9}));
}

TEST_CASE("property: ecdf matches counting and ignores sample order") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> v(1, 64), n(1, 500);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> s(static_cast<std::size_t>(n(rng)));
    for (auto& x : s) x = v(rng);
    const Ecdf e = ecdf(s);
    for (double x = 0; x <= 65; x += 0.5) CHECK(e(x) == doctest::Approx(oracle::ecdf_at(s, x)).epsilon(1e-12));
    std::shuffle(s.begin(), s.end(), rng);
    const Ecdf f = ecdf(s);
    CHECK(f.support() == e.support());
    CHECK(f.cum_prob() == e.cum_prob());
    for (std::size_t i = 1; i < e.cum_prob().size(); ++i) CHECK(e.cum_prob()[i] > e.cum_prob()[i - 1]);
    CHECK(e.cum_prob().back() == 1.0);
  }
}

TEST_CASE("save_ecdf") {
  testutil::TempDir dir;
  save_ecdf(dir / "e.csv", ecdf(std::vector<int>{1, 2, 3, 4}));
  CHECK(testutil::read_file(dir / "e.csv") == "trials,cum_prob\n1,0.25\n2,0.5\n3,0.75\n4,1\n");
}

TEST_CASE("snr_loss examples") {
  CHECK(snr_loss({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(snr_loss(std::vector<double>(10, 10.0), std::vector<double>(10, 8.6)) == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(snr_loss({10, 10}, {12, 7}) == doctest::Approx(0.5));
  CHECK_THROWS(snr_loss({1, 2}, {1}));
}

TEST_CASE("se_loss examples") {
  CHECK(se_loss({3, 4}, {3, 4}) == 0.0);
  CHECK(se_loss({0, 0}, {-kInf, -kInf}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(se_loss({1}, {}));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> db(-20, 30), drop(0, 15);
  std::vector<double> opt(200), q(200);
  double expect = 0;
  for (std::size_t i = 0; i < opt.size(); ++i) {
    opt[i] = db(rng);
    q[i] = opt[i] - drop(rng);
    expect += oracle::shannon(opt[i]) - oracle::shannon(q[i]);
  }
  CHECK(se_loss(opt, q) >= 0.0);
  CHECK(se_loss(opt, q) == doctest::Approx(expect / 200).epsilon(1e-12));
}

TEST_CASE("quantization_sweep: level 0 on rank-1 channels is lossless") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0, 2 * pi);
  std::vector<QuantizationLink> links;
  for (int i = 0; i < 50; ++i) links.push_back(rank1_link(ang(rng), ang(rng), 1e-5, ang(rng)));
  const auto rows = quantization_sweep(links, {0}, {QuantizerKind::uniform}, params());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n_links == 50);
  CHECK(std::abs(rows[0].snr_loss_db) < 0.01);
  CHECK(std::abs(rows[0].se_loss_bps_hz) < 0.01);
}

TEST_CASE("quantization_sweep shape and admission") {
  std::vector<QuantizationLink> links{rank1_link(0.1, 0.2, 1e-5), rank1_link(1.0, 2.0, 1e-12)};
  const auto rows = quantization_sweep(links, {5, 10, 15, 20}, {QuantizerKind::uniform, QuantizerKind::lloyd}, params());
  CHECK(rows.size() == 8);
  for (const auto& r : rows) CHECK(r.n_links == 1);  // the 1e-12 link is below 0 dB
  CHECK(rows[0].level_deg == 5);
  CHECK(rows[1].quantizer == QuantizerKind::lloyd);
  CHECK_THROWS(quantization_sweep({}, {5}, {QuantizerKind::uniform}, params()));
  CHECK_THROWS(quantization_sweep(links, {-5}, {QuantizerKind::uniform}, params()));

  testutil::TempDir dir;
  save_loss_report(dir / "l.csv", rows);
  const std::string text = testutil::read_file(dir / "l.csv");
  CHECK(text.rfind("level_deg,quantizer,snr_loss_db,se_loss_bps_hz,n_links\n5,uniform,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}

TEST_CASE("property: per-link losses are nonnegative against the SVD optimum") {
  std::mt19937_64 rng(4);
  std::vector<QuantizationLink> links;
  for (int i = 0; i < 150; ++i) links.push_back(multipath_link(rng));
  auto p = params();
  p.gamma_th_db = -kInf;
  for (double level : {0.0, 5.0, 20.0}) {
    for (QuantizerKind q : {QuantizerKind::uniform, QuantizerKind::lloyd}) {
      for (const auto& s : quantization_link_snrs(links, level, q, p)) {
        CHECK(s.optimal_db - s.quantized_db >= -1e-9);
        CHECK(oracle::shannon(s.optimal_db) - oracle::shannon(s.quantized_db) >= -1e-9);
      }
    }
  }
}

TEST_CASE("property: uniform loss grows with the quantization level") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * pi);
  std::vector<QuantizationLink> links;
  for (int i = 0; i < 400; ++i) links.push_back(rank1_link(ang(rng), ang(rng), 1e-5));
  const auto rows = quantization_sweep(links, {0, 5, 10, 15, 20}, {QuantizerKind::uniform}, params());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].snr_loss_db >= rows[i - 1].snr_loss_db);
    CHECK(rows[i].se_loss_bps_hz >= rows[i - 1].se_loss_bps_hz);
  }
}

TEST_CASE("lloyd beats uniform at 20 deg on a spiked distribution") {
  // directions concentrated at 37 and 217 deg, between uniform beams
  std::mt19937_64 rng(6);
  std::normal_distribution<double> jitter(0, 1.0 * pi / 180);
  std::bernoulli_distribution flip(0.5);
  std::vector<double> w(360, 0.0);
  w[37] = 0.5;
  w[217] = 0.5;
  auto p = params();
  p.tx_pdf = AngularPdf::full_circle(w);
  p.rx_pdf = p.tx_pdf;
  std::vector<QuantizationLink> links;
  for (int i = 0; i < 200; ++i) {
    const double base = (flip(rng) ? 37.0 : 217.0) * pi / 180;
    links.push_back(rank1_link(base + jitter(rng), base + jitter(rng), 1e-5));
  }
  const auto rows = quantization_sweep(links, {20}, {QuantizerKind::uniform, QuantizerKind::lloyd}, p);
  CHECK(rows[1].snr_loss_db <= rows[0].snr_loss_db);
  CHECK(rows[1].se_loss_bps_hz <= rows[0].se_loss_bps_hz);
}

TEST_CASE("quantizer names") {
  CHECK(quantizer_from_string(to_string(QuantizerKind::lloyd)) == QuantizerKind::lloyd);
  CHECK(quantizer_from_string("uniform") == QuantizerKind::uniform);
  CHECK_THROWS(quantizer_from_string("kmeans"));
}

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

#include "iasim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iasim/geometry.hpp"

namespace iasim {

ArrayGeometry ArrayGeometry::standard(double carrier_ghz, int n_rings, int n_per_ring) {
  if (!(carrier_ghz > 0.0)) throw std::invalid_argument("carrier frequency must be > 0");
  ArrayGeometry g;
  g.n_rings = n_rings;
  g.n_per_ring = n_per_ring;
  g.wavelength = kSpeedOfLight / (carrier_ghz * 1e9);
  g.ring_spacing = g.wavelength / 2.0;
  g.radius = n_per_ring > 1 ? g.ring_spacing / (2.0 * std::sin(kPi / n_per_ring)) : g.ring_spacing;
  g.validate();
  return g;
}

void ArrayGeometry::validate() const {
  if (n_rings < 1 || n_per_ring < 1) throw std::invalid_argument("array needs >= 1 ring and element");
  if (!(radius > 0.0) || !(ring_spacing > 0.0) || !(wavelength > 0.0)) {
    throw std::invalid_argument("array radius, ring spacing and wavelength must be > 0");
  }
}

double element_angle(const ArrayGeometry& geom, int m) {
  return (2.0 * m - 1.0) * kPi / geom.n_per_ring;
}

cdouble element_response(const ArrayGeometry& geom, int m, int n, double az, double el) {
  if (m < 1 || m > geom.n_per_ring || n < 1 || n > geom.n_rings) {
    throw std::out_of_range("element index out of range");
  }
  const double k = kTwoPi / geom.wavelength;
  const double phase = k * geom.radius * std::cos(el) * std::cos(az - element_angle(geom, m)) +
                       k * geom.ring_spacing * (n - 1) * std::sin(el);
  return std::polar(1.0, phase);
}

Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, double az, double el) {
  Eigen::VectorXcd a(geom.n_elements());
  const double k = kTwoPi / geom.wavelength;
  const double horiz = k * geom.radius * std::cos(el);
  const double vert = k * geom.ring_spacing * std::sin(el);
  for (int n = 1; n <= geom.n_rings; ++n) {
    for (int m = 1; m <= geom.n_per_ring; ++m) {
      const double phase = horiz * std::cos(az - element_angle(geom, m)) + vert * (n - 1);
      a((n - 1) * geom.n_per_ring + (m - 1)) = std::polar(1.0, phase);
    }
  }
  return a;
}

double pathloss_los(double distance_m, double freq_ghz) {
  if (!(distance_m > 0.0) || !(freq_ghz > 0.0)) {
    throw std::domain_error("pathloss_los: distance and frequency must be > 0");
  }
  return 32.4 + 20.0 * std::log10(distance_m) + 20.0 * std::log10(freq_ghz);
}

void PropagationConfig::validate() const {
  if (!(carrier_ghz > 0.0)) throw std::invalid_argument("carrier_ghz must be > 0");
  if (!(reflection_loss_db >= 0.0)) throw std::invalid_argument("reflection_loss_db must be >= 0");
}

bool los_blocked(const ScenarioMap& map, Vec2 tx, Vec2 rx, double antenna_height,
                 std::optional<std::size_t> skip_wall) {
  if (tx == rx) throw std::invalid_argument("los_blocked: coincident endpoints");
  constexpr double kEndpointTol = 1e-9;
  const auto& walls = map.wall_segments();
  const auto& obstacles = map.obstacles();
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (skip_wall && *skip_wall == i) continue;
    if (obstacles[walls[i].obstacle].height <= antenna_height) continue;
    auto t = segment_hit(tx, rx, walls[i].a, walls[i].b);
    // open segment: touching exactly at an endpoint does not block
    if (t && *t > kEndpointTol && *t < 1.0 - kEndpointTol) return true;
  }
  return false;
}

namespace {

cdouble path_amplitude(double length, double extra_loss_db, const PropagationConfig& cfg) {
  const double loss_db = pathloss_los(length, cfg.carrier_ghz) + extra_loss_db;
  const double phase = wrap_2pi(-kTwoPi * length / cfg.wavelength());
  return std::polar(std::pow(10.0, -loss_db / 20.0), phase);
}

}  // namespace

std::vector<PathComponent> enumerate_paths(const ScenarioMap& map, const Pose& tx, const Pose& rx,
                                           const PropagationConfig& cfg) {
  cfg.validate();
  const Vec2 ptx = tx.position();
  const Vec2 prx = rx.position();
  if (ptx == prx) throw std::invalid_argument("enumerate_paths: coincident tx and rx");

  std::vector<PathComponent> paths;
  if (!los_blocked(map, ptx, prx, cfg.antenna_height)) {
    PathComponent p;
    p.kind = PathKind::los;
    p.length = distance(ptx, prx);
    p.amplitude = path_amplitude(p.length, 0.0, cfg);
    p.aod_az = relative_bearing(tx, prx);
    p.aoa_az = relative_bearing(rx, ptx);
    paths.push_back(p);
  }
  if (!cfg.include_reflections) return paths;

  const auto& walls = map.wall_segments();
  const auto& obstacles = map.obstacles();
  constexpr double kTol = 1e-9;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const auto& w = walls[i];
    if (obstacles[w.obstacle].height <= cfg.antenna_height) continue;
    const Vec2 image = mirror_across(ptx, w.a, w.b);
    // tx and rx must sit strictly on the same side of the wall line
    const Vec2 d = w.b - w.a;
    const double side_tx = cross(d, ptx - w.a);
    const double side_rx = cross(d, prx - w.a);
    if (side_tx * side_rx <= 0.0) continue;
    auto t = segment_hit(image, prx, w.a, w.b);
    if (!t || *t <= kTol || *t >= 1.0 - kTol) continue;
    const Vec2 q = image + *t * (prx - image);
    if (q == ptx || q == prx) continue;
    if (los_blocked(map, ptx, q, cfg.antenna_height, i) || los_blocked(map, q, prx, cfg.antenna_height, i)) {
      continue;
    }
    PathComponent p;
    p.kind = PathKind::reflected;
    p.length = distance(ptx, q) + distance(q, prx);
    p.amplitude = path_amplitude(p.length, cfg.reflection_loss_db, cfg);
    p.aod_az = relative_bearing(tx, q);
    p.aoa_az = relative_bearing(rx, q);
    paths.push_back(p);
  }
  return paths;
}

bool ChannelMatrix::has_los() const {
  return std::any_of(paths.begin(), paths.end(), [](const PathComponent& p) { return p.kind == PathKind::los; });
}

const PathComponent& ChannelMatrix::strongest_path() const {
  if (paths.empty()) throw std::logic_error("channel has no paths");
  return *std::max_element(paths.begin(), paths.end(), [](const PathComponent& a, const PathComponent& b) {
    return std::abs(a.amplitude) < std::abs(b.amplitude);
  });
}

ChannelMatrix assemble_channel(const std::vector<PathComponent>& paths, const ArrayGeometry& geom) {
  if (paths.empty()) throw std::invalid_argument("assemble_channel: no paths");
  const int n = geom.n_elements();
  ChannelMatrix h{Eigen::MatrixXcd::Zero(n, n), paths};
  for (const auto& p : paths) {
    const Eigen::VectorXcd a_r = steering_vector(geom, p.aoa_az, p.aoa_el);
    const Eigen::VectorXcd a_t = steering_vector(geom, p.aod_az, p.aod_el);
    h.entries.noalias() += p.amplitude * (a_r * a_t.adjoint());
  }
  return h;
}

}  // namespace iasim

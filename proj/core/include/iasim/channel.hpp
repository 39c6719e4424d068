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

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "iasim/scenario.hpp"

namespace iasim {

using cdouble = std::complex<double>;

// Stacked uniform circular arrays (a cylindrical array on the vehicle roof).
// Array azimuth 0 is aligned with the vehicle heading.
struct ArrayGeometry {
  int n_rings = 4;       // vertical UCAs
  int n_per_ring = 16;   // elements per UCA
  double radius = 0.0;   // m
  double ring_spacing = 0.0;  // m
  double wavelength = 0.0;    // m

  int n_elements() const { return n_rings * n_per_ring; }

  // Half-wavelength ring spacing and a radius that puts adjacent ring
  // elements half a wavelength apart.
  static ArrayGeometry standard(double carrier_ghz, int n_rings = 4, int n_per_ring = 16);

  void validate() const;

  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

// Angular position of element m (1-based) on its ring.
double element_angle(const ArrayGeometry& geom, int m);

// Response of element m (1..n_per_ring) on ring n (1..n_rings).
cdouble element_response(const ArrayGeometry& geom, int m, int n, double az, double el);

// Ring-major stacking: index (n-1)*n_per_ring + (m-1).
Eigen::VectorXcd steering_vector(const ArrayGeometry& geom, double az, double el = 0.0);

// Free-space LoS path loss in dB; distance in meters, frequency in GHz.
double pathloss_los(double distance_m, double freq_ghz);

enum class PathKind { los, reflected };

struct PathComponent {
  double aod_az = 0.0;  // heading-relative at the transmitter
  double aod_el = 0.0;
  double aoa_az = 0.0;  // heading-relative at the receiver
  double aoa_el = 0.0;
  cdouble amplitude{0.0, 0.0};
  PathKind kind = PathKind::los;
  double length = 0.0;  // m
};

struct PropagationConfig {
  double carrier_ghz = 28.0;
  double reflection_loss_db = 6.0;
  bool include_reflections = true;
  double antenna_height = 1.6;  // m above ground: vehicle roof + 0.1 m

  double wavelength() const { return kSpeedOfLight / (carrier_ghz * 1e9); }
  void validate() const;

  friend bool operator==(const PropagationConfig&, const PropagationConfig&) = default;
};

// True iff the open segment tx-rx crosses a wall of an obstacle taller than
// the antennas. `skip_wall` excludes one wall (the reflecting one).
bool los_blocked(const ScenarioMap& map, Vec2 tx, Vec2 rx, double antenna_height = 1.6,
                 std::optional<std::size_t> skip_wall = std::nullopt);

// LoS (when unblocked) plus first-order specular reflections by the image
// method. Empty when every candidate path is blocked.
std::vector<PathComponent> enumerate_paths(const ScenarioMap& map, const Pose& tx, const Pose& rx,
                                           const PropagationConfig& cfg);

struct ChannelMatrix {
  Eigen::MatrixXcd entries;  // rows: receive elements, cols: transmit elements
  std::vector<PathComponent> paths;

  bool has_los() const;
  // Path with the largest |amplitude|; throws on an empty path list.
  const PathComponent& strongest_path() const;
};

// H = sum_p alpha_p a_R(aoa_p) a_T(aod_p)^H.
ChannelMatrix assemble_channel(const std::vector<PathComponent>& paths, const ArrayGeometry& geom);

}  // namespace iasim

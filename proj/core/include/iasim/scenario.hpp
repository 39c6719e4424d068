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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "iasim/angles.hpp"

namespace iasim {

// Planar vehicle state. Heading is clockwise from north, in [0, 2pi).
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double speed = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

// Validates and normalizes heading; throws on negative speed.
Pose make_pose(double x, double y, double heading, double speed);

struct TraceSample {
  std::int64_t step = 0;
  Pose pose;
  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

struct VehicleTrace {
  std::string vehicle_id;
  double timestep = 0.1;
  std::vector<TraceSample> samples;  // strictly increasing step

  // Pose at `step`, if the vehicle is present then.
  std::optional<Pose> at(std::int64_t step) const;
  friend bool operator==(const VehicleTrace&, const VehicleTrace&) = default;
};

enum class ObstacleKind { building, foliage, vehicle };

std::string to_string(ObstacleKind kind);
ObstacleKind obstacle_kind_from_string(const std::string& s);

struct Obstacle {
  std::vector<Vec2> footprint;  // closed implicitly, >= 3 vertices
  double height = 10.0;
  ObstacleKind kind = ObstacleKind::building;
};

struct Segment {
  Vec2 a;
  Vec2 b;
  std::size_t obstacle = 0;  // index into ScenarioMap::obstacles()
};

struct Bounds {
  Vec2 min;
  Vec2 max;
};

class ScenarioMap {
 public:
  ScenarioMap() = default;
  // Validates every obstacle (>= 3 vertices, simple polygon, height > 0).
  explicit ScenarioMap(std::vector<Obstacle> obstacles);

  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  const std::vector<Segment>& wall_segments() const { return walls_; }
  const Bounds& bounds() const { return bounds_; }
  bool empty() const { return obstacles_.empty(); }

 private:
  std::vector<Obstacle> obstacles_;
  std::vector<Segment> walls_;
  Bounds bounds_;
};

struct PositionNoiseModel {
  double sigma_p = 0.0;  // meters, per axis
  std::uint64_t seed = 0;
};

// Stateful i.i.d. Gaussian position sampler. Not thread-safe; split per worker
// with distinct seeds.
class PositionSampler {
 public:
  explicit PositionSampler(PositionNoiseModel model);

  Vec2 sample(Vec2 true_pos);
  const PositionNoiseModel& model() const { return model_; }

 private:
  PositionNoiseModel model_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Vec2 sample_measured_position(Vec2 true_pos, PositionSampler& sampler);

// Measurement for one (vehicle, timestep). The draw is a pure function of
// (seed, vehicle_id, step), so repeated queries within a timestep agree and
// concurrent callers need no shared state.
Vec2 measured_position(const PositionNoiseModel& model, const std::string& vehicle_id,
                       std::int64_t step, Vec2 true_pos);

// Clockwise angle from the observer's heading to the observer->target ray.
double relative_bearing(const Pose& observer, Vec2 target);

struct LinkPair {
  std::string tx_id;
  std::string rx_id;
  friend bool operator==(const LinkPair&, const LinkPair&) = default;
};

// Unordered pairs present at `step` within max_range, each once with
// tx_id < rx_id, sorted lexicographically.
std::vector<LinkPair> enumerate_link_pairs(const std::vector<VehicleTrace>& traces,
                                           std::int64_t step, double max_range);

// trace-CSV: t,vehicle_id,x,y,heading_deg,speed
std::vector<VehicleTrace> load_traces(const std::filesystem::path& path, double timestep = 0.1);
void save_traces(const std::filesystem::path& path, const std::vector<VehicleTrace>& traces);

// map file: kind;height;x1,y1 x2,y2 ...
ScenarioMap load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const ScenarioMap& map);

enum class ScenarioKind { crossroad, roundabout, highway };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& s);

struct SyntheticParams {
  double extent = 200.0;         // half-length of each street / highway segment [m]
  int vehicles_per_lane = 4;     // per arm (crossroad), per lane (highway), total (roundabout)
  double max_speed = 50.0 / 3.6; // m/s
  double duration = 10.0;        // s
  double timestep = 0.1;         // s
  double road_width = 14.0;      // m, building setback from street center is road_width / 2
  double lane_offset = 1.75;     // lateral offset of each lane center from the street axis [m]
  int lanes_per_direction = 2;   // highway only
  double roundabout_radius = 20.0;
  double building_height = 15.0;
  double block_length = 40.0;    // building length along the street [m]
  double block_gap = 6.0;        // spacing between consecutive buildings [m]
  double block_depth = 20.0;     // building depth away from the street [m]
  bool buildings = true;         // ignored for highway, which never has buildings
  std::uint64_t seed = 1;

  static SyntheticParams defaults_for(ScenarioKind kind);

  friend bool operator==(const SyntheticParams&, const SyntheticParams&) = default;
};

struct Scenario {
  ScenarioMap map;
  std::vector<VehicleTrace> traces;
};

Scenario generate_synthetic_scenario(ScenarioKind kind, const SyntheticParams& params);

}  // namespace iasim

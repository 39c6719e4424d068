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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "iasim/scenario.hpp"

namespace iasim {

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::crossroad: return "crossroad";
    case ScenarioKind::roundabout: return "roundabout";
    case ScenarioKind::highway: return "highway";
  }
  return "crossroad";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  if (s == "crossroad") return ScenarioKind::crossroad;
  if (s == "roundabout") return ScenarioKind::roundabout;
  if (s == "highway") return ScenarioKind::highway;
  throw std::invalid_argument("unknown scenario kind '" + s + "'");
}

SyntheticParams SyntheticParams::defaults_for(ScenarioKind kind) {
  SyntheticParams p;
  if (kind == ScenarioKind::highway) {
    p.extent = 500.0;
    p.max_speed = 130.0 / 3.6;
    p.vehicles_per_lane = 5;
    p.buildings = false;
  }
  if (kind == ScenarioKind::roundabout) {
    p.vehicles_per_lane = 8;
  }
  return p;
}

namespace {

Obstacle rectangle(double x0, double y0, double x1, double y1, double height,
                   ObstacleKind kind = ObstacleKind::building) {
  // counter-clockwise
  return Obstacle{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, height, kind};
}

std::string vehicle_name(std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "v%04zu", index);
  return buf;
}

void validate(const SyntheticParams& p) {
  if (!(p.extent > 0.0) || !(p.duration > 0.0) || !(p.timestep > 0.0) || !(p.max_speed > 0.0) ||
      !(p.road_width > 0.0) || !(p.roundabout_radius > 0.0) || !(p.building_height > 0.0) ||
      !(p.block_length > 0.0) || !(p.block_depth > 0.0) || p.block_gap < 0.0 ||
      p.vehicles_per_lane < 1 || p.lanes_per_direction < 1 || p.lane_offset < 0.0) {
    throw std::invalid_argument("synthetic scenario parameters must be positive");
  }
}

// Straight-line traffic along `axis` wrapping over [-extent, extent).
struct LinearMover {
  Vec2 origin;     // point on the lane at u = 0
  Vec2 direction;  // unit
  double u0;
  double speed;
};

Pose linear_pose(const LinearMover& m, double t, double extent) {
  const double span = 2.0 * extent;
  double u = std::fmod(m.u0 + extent + m.speed * t, span);
  if (u < 0.0) u += span;
  u -= extent;
  const Vec2 pos = m.origin + u * m.direction;
  return make_pose(pos.x, pos.y, std::atan2(m.direction.x, m.direction.y), m.speed);
}

std::vector<VehicleTrace> trace_linear(const std::vector<LinearMover>& movers, const SyntheticParams& p) {
  const auto steps = static_cast<std::int64_t>(std::llround(p.duration / p.timestep));
  std::vector<VehicleTrace> out;
  for (std::size_t i = 0; i < movers.size(); ++i) {
    VehicleTrace tr{vehicle_name(i), p.timestep, {}};
    for (std::int64_t k = 0; k < steps; ++k) {
      tr.samples.push_back({k, linear_pose(movers[i], static_cast<double>(k) * p.timestep, p.extent)});
    }
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<Obstacle> crossroad_buildings(const SyntheticParams& p) {
  std::vector<Obstacle> out;
  const double s = p.road_width / 2.0;
  const double pitch = p.block_length + p.block_gap;
  for (int qx : {1, -1}) {
    for (int qy : {1, -1}) {
      // along the east-west street, starting at the corner
      for (double a = s; a + p.block_length <= p.extent; a += pitch) {
        const double x0 = qx * a, x1 = qx * (a + p.block_length);
        const double y0 = qy * s, y1 = qy * (s + p.block_depth);
        out.push_back(rectangle(std::min(x0, x1), std::min(y0, y1), std::max(x0, x1), std::max(y0, y1),
                                p.building_height));
      }
      // along the north-south street, clear of the corner block
      for (double a = s + p.block_depth + p.block_gap; a + p.block_length <= p.extent; a += pitch) {
        const double x0 = qx * s, x1 = qx * (s + p.block_depth);
        const double y0 = qy * a, y1 = qy * (a + p.block_length);
        out.push_back(rectangle(std::min(x0, x1), std::min(y0, y1), std::max(x0, x1), std::max(y0, y1),
                                p.building_height));
      }
    }
  }
  return out;
}

Scenario crossroad(const SyntheticParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> speed(0.6 * p.max_speed, p.max_speed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  struct Arm {
    Vec2 lane_origin;
    Vec2 direction;
  };
  const double o = p.lane_offset;
  // right-hand traffic: northbound, eastbound, southbound, westbound
  const Arm arms[] = {{{o, 0.0}, {0.0, 1.0}},
                      {{0.0, -o}, {1.0, 0.0}},
                      {{-o, 0.0}, {0.0, -1.0}},
                      {{0.0, o}, {-1.0, 0.0}}};
  std::vector<LinearMover> movers;
  const int n = p.vehicles_per_lane;
  for (const auto& arm : arms) {
    for (int i = 0; i < n; ++i) {
      // start on the incoming arm, evenly spaced with a little jitter
      const double frac = (static_cast<double>(i) + 0.5 + jitter(rng)) / n;
      movers.push_back({arm.lane_origin, arm.direction, -p.extent * frac, speed(rng)});
    }
  }
  Scenario sc;
  if (p.buildings) sc.map = ScenarioMap(crossroad_buildings(p));
  sc.traces = trace_linear(movers, p);
  return sc;
}

Scenario highway(const SyntheticParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> speed(0.7 * p.max_speed, p.max_speed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  constexpr double kLaneWidth = 3.5;
  std::vector<LinearMover> movers;
  const int n = p.vehicles_per_lane;
  for (int dir : {1, -1}) {
    for (int lane = 0; lane < p.lanes_per_direction; ++lane) {
      const double y = -dir * (p.lane_offset + lane * kLaneWidth);
      for (int i = 0; i < n; ++i) {
        const double frac = (static_cast<double>(i) + 0.5 + jitter(rng)) / n;
        movers.push_back({{0.0, y}, {static_cast<double>(dir), 0.0}, -p.extent + 2.0 * p.extent * frac,
                          speed(rng)});
      }
    }
  }
  Scenario sc;
  sc.traces = trace_linear(movers, p);
  return sc;
}

Scenario roundabout(const SyntheticParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> speed(0.6 * p.max_speed, p.max_speed);
  const double radius = p.roundabout_radius;
  const int n = p.vehicles_per_lane;
  const auto steps = static_cast<std::int64_t>(std::llround(p.duration / p.timestep));

  Scenario sc;
  for (int i = 0; i < n; ++i) {
    const double psi0 = kTwoPi * i / n;
    const double v = speed(rng);
    const double omega = v / radius;
    VehicleTrace tr{vehicle_name(static_cast<std::size_t>(i)), p.timestep, {}};
    for (std::int64_t k = 0; k < steps; ++k) {
      // counter-clockwise travel: the clockwise position angle decreases
      const double psi = psi0 - omega * static_cast<double>(k) * p.timestep;
      tr.samples.push_back({k, make_pose(radius * std::sin(psi), radius * std::cos(psi), psi - kPi / 2.0, v)});
    }
    sc.traces.push_back(std::move(tr));
  }

  if (p.buildings) {
    std::vector<Obstacle> obstacles;
    const double c = radius + p.road_width + p.block_depth / 2.0;
    const double h = p.block_depth / 2.0;
    for (int qx : {1, -1}) {
      for (int qy : {1, -1}) {
        obstacles.push_back(rectangle(qx * c - h, qy * c - h, qx * c + h, qy * c + h, p.building_height));
      }
    }
    sc.map = ScenarioMap(std::move(obstacles));
  }
  return sc;
}

}  // namespace

Scenario generate_synthetic_scenario(ScenarioKind kind, const SyntheticParams& params) {
  validate(params);
  std::mt19937_64 rng(params.seed);
  switch (kind) {
    case ScenarioKind::crossroad: return crossroad(params, rng);
    case ScenarioKind::roundabout: return roundabout(params, rng);
    case ScenarioKind::highway: return highway(params, rng);
  }
  throw std::invalid_argument("unknown scenario kind");
}

}  // namespace iasim

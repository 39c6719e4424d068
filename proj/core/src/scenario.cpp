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

#include "iasim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "iasim/csv.hpp"
#include "iasim/errors.hpp"
#include "iasim/geometry.hpp"

namespace iasim {

Pose make_pose(double x, double y, double heading, double speed) {
  if (!(speed >= 0.0)) throw std::invalid_argument("pose speed must be >= 0");
  return Pose{x, y, wrap_2pi(heading), speed};
}

std::optional<Pose> VehicleTrace::at(std::int64_t step) const {
  auto it = std::lower_bound(samples.begin(), samples.end(), step,
                             [](const TraceSample& s, std::int64_t v) { return s.step < v; });
  if (it == samples.end() || it->step != step) return std::nullopt;
  return it->pose;
}

std::string to_string(ObstacleKind kind) {
  switch (kind) {
    case ObstacleKind::building: return "building";
    case ObstacleKind::foliage: return "foliage";
    case ObstacleKind::vehicle: return "vehicle";
  }
  return "building";
}

ObstacleKind obstacle_kind_from_string(const std::string& s) {
  if (s == "building") return ObstacleKind::building;
  if (s == "foliage") return ObstacleKind::foliage;
  if (s == "vehicle") return ObstacleKind::vehicle;
  throw std::invalid_argument("unknown obstacle kind '" + s + "'");
}

ScenarioMap::ScenarioMap(std::vector<Obstacle> obstacles) : obstacles_(std::move(obstacles)) {
  bounds_ = {{INFINITY, INFINITY}, {-INFINITY, -INFINITY}};
  for (std::size_t k = 0; k < obstacles_.size(); ++k) {
    const auto& ob = obstacles_[k];
    if (ob.footprint.size() < 3) throw std::invalid_argument("obstacle needs >= 3 vertices");
    if (!(ob.height > 0.0)) throw std::invalid_argument("obstacle height must be > 0");
    if (!is_simple_polygon(ob.footprint)) throw std::invalid_argument("obstacle polygon is not simple");
    const std::size_t n = ob.footprint.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = ob.footprint[i];
      walls_.push_back({a, ob.footprint[(i + 1) % n], k});
      bounds_.min = {std::min(bounds_.min.x, a.x), std::min(bounds_.min.y, a.y)};
      bounds_.max = {std::max(bounds_.max.x, a.x), std::max(bounds_.max.y, a.y)};
    }
  }
  if (obstacles_.empty()) bounds_ = {};
}

PositionSampler::PositionSampler(PositionNoiseModel model) : model_(model), engine_(model.seed) {
  if (!(model.sigma_p >= 0.0)) throw std::invalid_argument("sigma_p must be >= 0");
}

Vec2 PositionSampler::sample(Vec2 true_pos) {
  if (model_.sigma_p == 0.0) return true_pos;
  const double ex = normal_(engine_);
  const double ey = normal_(engine_);
  return {true_pos.x + model_.sigma_p * ex, true_pos.y + model_.sigma_p * ey};
}

Vec2 sample_measured_position(Vec2 true_pos, PositionSampler& sampler) {
  return sampler.sample(true_pos);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Vec2 measured_position(const PositionNoiseModel& model, const std::string& vehicle_id,
                       std::int64_t step, Vec2 true_pos) {
  if (model.sigma_p == 0.0) return true_pos;
  const std::uint64_t key =
      splitmix64(model.seed ^ splitmix64(fnv1a(vehicle_id) ^ splitmix64(static_cast<std::uint64_t>(step))));
  PositionSampler sampler({model.sigma_p, key});
  return sampler.sample(true_pos);
}

double relative_bearing(const Pose& observer, Vec2 target) {
  const Vec2 from = observer.position();
  if (from == target) throw std::invalid_argument("relative_bearing: target coincides with observer");
  return wrap_2pi(global_bearing(from, target) - observer.heading);
}

std::vector<LinkPair> enumerate_link_pairs(const std::vector<VehicleTrace>& traces,
                                           std::int64_t step, double max_range) {
  if (!(max_range > 0.0)) throw std::invalid_argument("max_range must be > 0");
  std::vector<std::pair<std::string, Vec2>> present;
  for (const auto& tr : traces) {
    if (auto p = tr.at(step)) present.emplace_back(tr.vehicle_id, p->position());
  }
  std::sort(present.begin(), present.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LinkPair> out;
  for (std::size_t i = 0; i < present.size(); ++i) {
    for (std::size_t j = i + 1; j < present.size(); ++j) {
      if (distance(present[i].second, present[j].second) <= max_range) {
        out.push_back({present[i].first, present[j].first});
      }
    }
  }
  return out;
}

std::vector<VehicleTrace> load_traces(const std::filesystem::path& path, double timestep) {
  if (!(timestep > 0.0)) throw std::invalid_argument("timestep must be > 0");
  std::map<std::string, VehicleTrace> by_id;
  bool header_seen = false;
  csv::for_each_line(path, [&](std::string_view line, std::size_t number) {
    auto fields = csv::split(line, ',');
    if (!header_seen) {
      const std::vector<std::string> expected{"t", "vehicle_id", "x", "y", "heading_deg", "speed"};
      if (fields != expected) throw ParseError("bad trace header", number);
      header_seen = true;
      return;
    }
    if (fields.size() != 6) throw ParseError("expected 6 fields", number);
    try {
      const double t = csv::to_double(fields[0]);
      const auto step = static_cast<std::int64_t>(std::llround(t / timestep));
      const Pose pose = make_pose(csv::to_double(fields[2]), csv::to_double(fields[3]),
                                  deg2rad(csv::to_double(fields[4])), csv::to_double(fields[5]));
      auto& tr = by_id[fields[1]];
      if (tr.vehicle_id.empty()) {
        tr.vehicle_id = fields[1];
        tr.timestep = timestep;
      }
      if (!tr.samples.empty() && tr.samples.back().step >= step) {
        throw ParseError("non-monotone timestamp for vehicle " + fields[1], number);
      }
      tr.samples.push_back({step, pose});
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
  });
  if (!header_seen) throw ParseError("missing trace header", 1);
  std::vector<VehicleTrace> out;
  out.reserve(by_id.size());
  for (auto& [id, tr] : by_id) out.push_back(std::move(tr));
  return out;
}

void save_traces(const std::filesystem::path& path, const std::vector<VehicleTrace>& traces) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "t,vehicle_id,x,y,heading_deg,speed\n";
  // time-ordered rows; ties keep trace order
  std::vector<std::tuple<std::int64_t, std::size_t, std::size_t>> rows;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t k = 0; k < traces[i].samples.size(); ++k) {
      rows.emplace_back(traces[i].samples[k].step, i, k);
    }
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [step, i, k] : rows) {
    const auto& tr = traces[i];
    const Pose& p = tr.samples[k].pose;
    out << csv::fmt(static_cast<double>(step) * tr.timestep) << ',' << tr.vehicle_id << ','
        << csv::fmt(p.x) << ',' << csv::fmt(p.y) << ',' << csv::fmt(rad2deg(p.heading)) << ','
        << csv::fmt(p.speed) << '\n';
  }
}

ScenarioMap load_map(const std::filesystem::path& path) {
  std::vector<Obstacle> obstacles;
  csv::for_each_line(path, [&](std::string_view line, std::size_t number) {
    auto parts = csv::split(line, ';');
    if (parts.size() != 3) throw ParseError("expected kind;height;vertices", number);
    try {
      Obstacle ob;
      ob.kind = obstacle_kind_from_string(parts[0]);
      ob.height = csv::to_double(parts[1]);
      for (const auto& token : csv::split(parts[2], ' ')) {
        if (token.empty()) continue;
        auto xy = csv::split(token, ',');
        if (xy.size() != 2) throw std::invalid_argument("bad vertex '" + token + "'");
        ob.footprint.push_back({csv::to_double(xy[0]), csv::to_double(xy[1])});
      }
      if (ob.footprint.size() < 3) throw std::invalid_argument("obstacle needs >= 3 vertices");
      obstacles.push_back(std::move(ob));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
  });
  return ScenarioMap(std::move(obstacles));
}

void save_map(const std::filesystem::path& path, const ScenarioMap& map) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# kind;height;x1,y1 x2,y2 ...\n";
  for (const auto& ob : map.obstacles()) {
    out << to_string(ob.kind) << ';' << csv::fmt(ob.height) << ';';
    for (std::size_t i = 0; i < ob.footprint.size(); ++i) {
      if (i) out << ' ';
      out << csv::fmt(ob.footprint[i].x) << ',' << csv::fmt(ob.footprint[i].y);
    }
    out << '\n';
  }
}

}  // namespace iasim

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

#include <cmath>
#include <random>
#include <set>

#include "iasim/errors.hpp"
#include "iasim/geometry.hpp"
#include "iasim/scenario.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace iasim;

TEST_CASE("load_traces maps fields and converts headings") {
  testutil::TempDir dir;
  testutil::write_file(dir / "t.csv", "t,vehicle_id,x,y,heading_deg,speed\n0.0,7,100.0,50.0,90.0,13.9\n");
  const auto traces = load_traces(dir / "t.csv");
  REQUIRE(traces.size() == 1);
  CHECK(traces[0].vehicle_id == "7");
  REQUIRE(traces[0].samples.size() == 1);
  const auto& s = traces[0].samples[0];
  CHECK(s.step == 0);
  CHECK(s.pose.x == 100.0);
  CHECK(s.pose.y == 50.0);
  CHECK(s.pose.heading == doctest::Approx(oracle::pi / 2).epsilon(1e-15));
  CHECK(s.pose.speed == 13.9);
}

TEST_CASE("load_traces: header only gives no traces") {
  testutil::TempDir dir;
  testutil::write_file(dir / "t.csv", "t,vehicle_id,x,y,heading_deg,speed\n");
  CHECK(load_traces(dir / "t.csv").empty());
}

TEST_CASE("load_traces groups interleaved vehicles") {
  testutil::TempDir dir;
  std::string text = "t,vehicle_id,x,y,heading_deg,speed\n";
  for (int k = 0; k < 3; ++k) {
    for (const char* id : {"a", "b"}) {
      text += std::to_string(0.1 * k) + "," + id + ",1,2,370,1\n";
    }
  }
  testutil::write_file(dir / "t.csv", text);
  const auto traces = load_traces(dir / "t.csv");
  REQUIRE(traces.size() == 2);
  for (const auto& tr : traces) {
    REQUIRE(tr.samples.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(tr.samples[static_cast<std::size_t>(k)].step == k);
    CHECK(tr.samples[0].pose.heading == doctest::Approx(oracle::pi / 18));
  }
}

TEST_CASE("load_traces errors carry the row number") {
  testutil::TempDir dir;
  testutil::write_file(dir / "bad.csv", "t,vehicle_id,x,y,heading_deg,speed\n0,a,1,2,0,1\n0.1,a,1,x,0,1\n");
  try {
    load_traces(dir / "bad.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  testutil::write_file(dir / "order.csv", "t,vehicle_id,x,y,heading_deg,speed\n0.2,a,1,2,0,1\n0.1,a,1,2,0,1\n");
  CHECK_THROWS_AS(load_traces(dir / "order.csv"), ParseError);
}

TEST_CASE("trace round trip") {
  testutil::TempDir dir;
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::roundabout);
  p.duration = 1.0;
  const auto s = generate_synthetic_scenario(ScenarioKind::roundabout, p);
  save_traces(dir / "t.csv", s.traces);
  const auto back = load_traces(dir / "t.csv");
  REQUIRE(back.size() == s.traces.size());
  for (std::size_t v = 0; v < back.size(); ++v) {
    CHECK(back[v].vehicle_id == s.traces[v].vehicle_id);
    REQUIRE(back[v].samples.size() == s.traces[v].samples.size());
    for (std::size_t k = 0; k < back[v].samples.size(); ++k) {
      const auto& a = back[v].samples[k];
      const auto& b = s.traces[v].samples[k];
      CHECK(a.step == b.step);
      CHECK(a.pose.x == b.pose.x);
      CHECK(a.pose.y == b.pose.y);
      CHECK(a.pose.speed == b.pose.speed);
      // heading is stored in degrees
      CHECK(oracle::circ_dist(a.pose.heading, b.pose.heading) < 1e-12);
    }
  }
}

TEST_CASE("map round trip and wall count") {
  testutil::TempDir dir;
  const auto s = generate_synthetic_scenario(ScenarioKind::crossroad, SyntheticParams::defaults_for(ScenarioKind::crossroad));
  save_map(dir / "m.txt", s.map);
  const ScenarioMap loaded = load_map(dir / "m.txt");
  REQUIRE(loaded.obstacles().size() == s.map.obstacles().size());
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < loaded.obstacles().size(); ++i) {
    CHECK(loaded.obstacles()[i].footprint == s.map.obstacles()[i].footprint);
    CHECK(loaded.obstacles()[i].height == s.map.obstacles()[i].height);
    vertices += loaded.obstacles()[i].footprint.size();
  }
  CHECK(loaded.wall_segments().size() == vertices);
}

TEST_CASE("obstacle validation") {
  CHECK_THROWS(ScenarioMap({Obstacle{{{0, 0}, {1, 0}}, 5.0}}));
  CHECK_THROWS(ScenarioMap({Obstacle{{{0, 0}, {1, 0}, {1, 1}}, 0.0}}));
  // bow tie
  CHECK_THROWS(ScenarioMap({Obstacle{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}, 5.0}}));
  CHECK_NOTHROW(ScenarioMap({Obstacle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 5.0}}));
}

TEST_CASE("measured positions") {
  SUBCASE("zero noise is the identity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e4, 1e4);
    PositionSampler sampler({0.0, 11});
    for (int i = 0; i < 1000; ++i) {
      const Vec2 p{u(rng), u(rng)};
      CHECK(sample_measured_position(p, sampler) == p);
      CHECK(measured_position({0.0, 5}, "v", i, p) == p);
    }
  }
  SUBCASE("sigma 4 m gives per-axis std in [3.9, 4.1]") {
    PositionSampler sampler({4.0, 2024});
    double sx = 0, sxx = 0, sy = 0, syy = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const Vec2 e = sample_measured_position({10, -3}, sampler) - Vec2{10, -3};
      sx += e.x; sxx += e.x * e.x; sy += e.y; syy += e.y * e.y;
    }
    const double stdx = std::sqrt(sxx / n - (sx / n) * (sx / n));
    const double stdy = std::sqrt(syy / n - (sy / n) * (sy / n));
    CHECK(stdx >= 3.9);
    CHECK(stdx <= 4.1);
    CHECK(stdy >= 3.9);
    CHECK(stdy <= 4.1);
  }
  SUBCASE("per-vehicle hashed draws also have the configured spread") {
    double sxx = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sxx += std::pow(measured_position({4.0, 9}, "v" + std::to_string(i % 37), i, {0, 0}).x, 2);
    const double s = std::sqrt(sxx / n);
    CHECK(s >= 3.9);
    CHECK(s <= 4.1);
  }
  SUBCASE("fixed seed reproduces bitwise") {
    PositionSampler a({4.0, 77}), b({4.0, 77});
    for (int i = 0; i < 100; ++i) CHECK(a.sample({1, 2}) == b.sample({1, 2}));
    CHECK(measured_position({4.0, 77}, "x", 3, {1, 2}) == measured_position({4.0, 77}, "x", 3, {1, 2}));
    CHECK_FALSE(measured_position({4.0, 77}, "x", 3, {1, 2}) == measured_position({4.0, 77}, "x", 4, {1, 2}));
  }
}

TEST_CASE("relative_bearing examples") {
  const Pose north = make_pose(0, 0, 0, 0);
  CHECK(relative_bearing(north, {0, 10}) == doctest::Approx(0.0));
  CHECK(relative_bearing(north, {10, 0}) == doctest::Approx(oracle::pi / 2));
  CHECK(relative_bearing(make_pose(0, 0, oracle::pi / 2, 0), {0, 10}) == doctest::Approx(3 * oracle::pi / 2));
  CHECK_THROWS(relative_bearing(north, {0, 0}));
}

TEST_CASE("property: relative bearing plus heading is the global bearing") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-500, 500), h(0, 2 * oracle::pi);
  for (int i = 0; i < 2000; ++i) {
    const Pose o = make_pose(u(rng), u(rng), h(rng), 1);
    const Vec2 t{u(rng), u(rng)};
    const double got = oracle::wrap(relative_bearing(o, t) + o.heading);
    CHECK(oracle::circ_dist(got, oracle::bearing(o.x, o.y, t.x, t.y)) < 1e-9);
  }
}

TEST_CASE("make_pose normalizes heading") {
  CHECK(make_pose(0, 0, -oracle::pi / 2, 0).heading == doctest::Approx(3 * oracle::pi / 2));
  CHECK(make_pose(0, 0, 5 * oracle::pi, 0).heading == doctest::Approx(oracle::pi));
  CHECK_THROWS(make_pose(0, 0, 0, -1));
}

namespace {
VehicleTrace single(const std::string& id, double x, double y) {
  return {id, 0.1, {{0, make_pose(x, y, 0, 0)}}};
}
}  // namespace

TEST_CASE("enumerate_link_pairs") {
  CHECK(enumerate_link_pairs({single("a", 0, 0), single("b", 50, 0)}, 0, 100).size() == 1);
  CHECK(enumerate_link_pairs({single("a", 0, 0), single("b", 150, 0)}, 0, 100).empty());
  std::vector<VehicleTrace> four{single("d", 1, 1), single("b", 1, 1), single("c", 1, 1), single("a", 1, 1)};
  const auto pairs = enumerate_link_pairs(four, 0, 10);
  // brute-force C(4, 2) over sorted ids
  std::vector<LinkPair> expect;
  const std::vector<std::string> ids{"a", "b", "c", "d"};
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) expect.push_back({ids[i], ids[j]});
  CHECK(pairs == expect);
  CHECK(enumerate_link_pairs(four, 1, 10).empty());
  CHECK_THROWS(enumerate_link_pairs(four, 0, 0));
}

TEST_CASE("synthetic crossroad") {
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::crossroad);
  p.vehicles_per_lane = 1;
  const auto s = generate_synthetic_scenario(ScenarioKind::crossroad, p);
  CHECK(s.traces.size() == 4);
  std::set<int> quarter_turns;
  for (const auto& tr : s.traces) {
    for (const auto& smp : tr.samples) {
      const double q = smp.pose.heading / (oracle::pi / 2);
      CHECK(std::abs(q - std::round(q)) < 1e-12);
      quarter_turns.insert(static_cast<int>(std::lround(q)) % 4);
    }
  }
  CHECK(quarter_turns == std::set<int>{0, 1, 2, 3});
  CHECK_FALSE(s.map.empty());
  // vehicles never sit inside a building
  for (const auto& tr : s.traces) {
    for (const auto& smp : tr.samples) {
      for (const auto& ob : s.map.obstacles()) {
        const auto& f = ob.footprint;
        double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
        for (auto v : f) { minx = std::min(minx, v.x); maxx = std::max(maxx, v.x); miny = std::min(miny, v.y); maxy = std::max(maxy, v.y); }
        CHECK_FALSE((smp.pose.x > minx && smp.pose.x < maxx && smp.pose.y > miny && smp.pose.y < maxy));
      }
    }
  }
}

TEST_CASE("synthetic highway has no buildings and bounded speed") {
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::highway);
  p.buildings = false;
  const auto s = generate_synthetic_scenario(ScenarioKind::highway, p);
  CHECK(s.map.obstacles().empty());
  for (const auto& tr : s.traces)
    for (const auto& smp : tr.samples) CHECK(smp.pose.speed <= p.max_speed);
  CHECK(p.max_speed == doctest::Approx(130.0 / 3.6));
  CHECK(SyntheticParams::defaults_for(ScenarioKind::crossroad).max_speed == doctest::Approx(50.0 / 3.6));
}

TEST_CASE("synthetic roundabout heading is tangent to the circle") {
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::roundabout);
  p.roundabout_radius = 20.0;
  const auto s = generate_synthetic_scenario(ScenarioKind::roundabout, p);
  REQUIRE_FALSE(s.traces.empty());
  for (const auto& tr : s.traces) {
    for (std::size_t k = 0; k + 1 < tr.samples.size(); ++k) {
      const Pose& a = tr.samples[k].pose;
      const Pose& b = tr.samples[k + 1].pose;
      CHECK(std::hypot(a.x, a.y) == doctest::Approx(20.0));
      // tangent: heading perpendicular to the radius
      const double hx = std::sin(a.heading), hy = std::cos(a.heading);
      CHECK(std::abs(hx * a.x + hy * a.y) < 1e-9);
      // and consistent with the direction of travel
      CHECK(hx * (b.x - a.x) + hy * (b.y - a.y) > 0.0);
    }
  }
}

TEST_CASE("synthetic parameters must be positive") {
  SyntheticParams p = SyntheticParams::defaults_for(ScenarioKind::crossroad);
  p.extent = 0.0;
  CHECK_THROWS_AS(generate_synthetic_scenario(ScenarioKind::crossroad, p), std::invalid_argument);
  p = SyntheticParams::defaults_for(ScenarioKind::highway);
  p.duration = -1.0;
  CHECK_THROWS_AS(generate_synthetic_scenario(ScenarioKind::highway, p), std::invalid_argument);
}

TEST_CASE("geometry helpers") {
  CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  const Vec2 m = mirror_across({1, 3}, {0, 0}, {5, 0});
  CHECK(m.x == doctest::Approx(1));
  CHECK(m.y == doctest::Approx(-3));
  const std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(signed_area(sq) == doctest::Approx(1.0));
}

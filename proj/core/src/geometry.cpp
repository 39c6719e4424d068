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

#include "iasim/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace iasim {

namespace {

constexpr double kEps = 1e-12;

}  // namespace

std::optional<double> segment_hit(Vec2 p, Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 r = q - p;
  const Vec2 s = b - a;
  const double denom = cross(r, s);
  const Vec2 ap = a - p;
  const double scale = std::max({r.norm() * s.norm(), 1.0});

  if (std::abs(denom) <= kEps * scale) {
    // parallel; only collinear overlaps count
    if (std::abs(cross(ap, r)) > kEps * std::max(r.norm() * ap.norm(), 1.0)) return std::nullopt;
    const double rr = dot(r, r);
    if (rr == 0.0) return std::nullopt;
    double t0 = dot(a - p, r) / rr;
    double t1 = dot(b - p, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    if (t1 < 0.0 || t0 > 1.0) return std::nullopt;
    return std::max(t0, 0.0);
  }

  const double t = cross(ap, s) / denom;
  const double u = cross(ap, r) / denom;
  const double tol = 1e-12;
  if (t < -tol || t > 1.0 + tol || u < -tol || u > 1.0 + tol) return std::nullopt;
  return std::clamp(t, 0.0, 1.0);
}

bool segments_intersect(Vec2 p, Vec2 q, Vec2 a, Vec2 b) {
  return segment_hit(p, q, a, b).has_value();
}

Vec2 mirror_across(Vec2 point, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double dd = dot(d, d);
  const double t = dot(point - a, d) / dd;
  const Vec2 foot = a + t * d;
  return foot + (foot - point);
}

bool is_simple_polygon(std::span<const Vec2> v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

double signed_area(std::span<const Vec2> v) {
  double area = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    area += cross(v[i], v[(i + 1) % v.size()]);
  }
  return 0.5 * area;
}

}  // namespace iasim

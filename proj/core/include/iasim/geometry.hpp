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

#include <optional>
#include <span>

#include "iasim/angles.hpp"

namespace iasim {

// Where segment p->q meets the closed segment a-b, as a parameter t in [0, 1]
// along p->q. Collinear overlaps report the first overlapping point.
std::optional<double> segment_hit(Vec2 p, Vec2 q, Vec2 a, Vec2 b);

// Closed-segment intersection test.
bool segments_intersect(Vec2 p, Vec2 q, Vec2 a, Vec2 b);

// Reflection of `point` across the infinite line through a and b.
Vec2 mirror_across(Vec2 point, Vec2 a, Vec2 b);

// True when no two non-adjacent edges of the closed polygon intersect.
bool is_simple_polygon(std::span<const Vec2> vertices);

double signed_area(std::span<const Vec2> vertices);

}  // namespace iasim

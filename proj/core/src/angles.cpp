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

#include "iasim/angles.hpp"

#include <stdexcept>

namespace iasim {

double wrap_2pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double wrap_pi(double angle) {
  double w = wrap_2pi(angle + kPi) - kPi;
  return w;
}

double circular_distance(double a, double b) {
  return std::abs(wrap_pi(a - b));
}

double global_bearing(Vec2 from, Vec2 to) {
  const Vec2 d = to - from;
  if (d.x == 0.0 && d.y == 0.0) {
    throw std::invalid_argument("global_bearing: coincident points");
  }
  return wrap_2pi(std::atan2(d.x, d.y));
}

}  // namespace iasim

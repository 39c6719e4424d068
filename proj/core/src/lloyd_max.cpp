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

#include "iasim/lloyd_max.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "iasim/angles.hpp"

namespace iasim {

namespace {

struct Partition {
  std::vector<std::size_t> owner;  // per pdf bin: index of nearest centroid
  double distortion = 0.0;
};

Partition assign(const AngularPdf& pdf, const std::vector<double>& centroids) {
  Partition p;
  p.owner.assign(pdf.size(), 0);
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    if (pdf.mass(i) == 0.0) continue;
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t j = 0; j < centroids.size(); ++j) {
      const double d = circular_distance(pdf.center(i), centroids[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    p.owner[i] = best;
    p.distortion += pdf.mass(i) * best_d * best_d;
  }
  return p;
}

}  // namespace

LloydMaxResult lloyd_max(const AngularPdf& pdf, std::size_t depth, const LloydMaxOptions& opts) {
  if (depth < 1) throw std::invalid_argument("lloyd_max: depth must be >= 1");
  if (!pdf.is_full_circle()) throw std::invalid_argument("lloyd_max: pdf must cover [0, 2pi)");
  if (!(opts.tolerance >= 0.0) || opts.max_iter < 0) throw std::invalid_argument("lloyd_max: bad options");

  LloydMaxResult res;
  res.requested_depth = depth;
  const auto support = static_cast<std::size_t>(
      std::count_if(pdf.masses().begin(), pdf.masses().end(), [](double m) { return m > 0.0; }));
  if (support < depth) {
    depth = support;
    res.depth_reduced = true;
  }

  std::vector<double> centroids = uniform_angles(depth);
  Partition part = assign(pdf, centroids);
  res.distortion.push_back(part.distortion);

  for (int it = 0; it < opts.max_iter; ++it) {
    // Centroid of each cell, measured along the arc around the current centroid.
    std::vector<double> weight(depth, 0.0), offset(depth, 0.0);
    for (std::size_t i = 0; i < pdf.size(); ++i) {
      const double m = pdf.mass(i);
      if (m == 0.0) continue;
      const std::size_t j = part.owner[i];
      weight[j] += m;
      offset[j] += m * wrap_pi(pdf.center(i) - centroids[j]);
    }
    std::vector<double> next = centroids;
    for (std::size_t j = 0; j < depth; ++j) {
      if (weight[j] > 0.0) next[j] = wrap_2pi(centroids[j] + offset[j] / weight[j]);
    }
    Partition candidate = assign(pdf, next);
    // at the fixed point rounding can nudge the distortion up; keep the old codebook
    if (candidate.distortion > part.distortion) break;
    const double previous = part.distortion;
    centroids = std::move(next);
    part = std::move(candidate);
    res.distortion.push_back(part.distortion);
    res.iterations = it + 1;
    if (previous - part.distortion < opts.tolerance) break;
  }

  std::vector<double> masses(depth, 0.0);
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    if (pdf.mass(i) > 0.0) masses[part.owner[i]] += pdf.mass(i);
  }
  std::vector<std::size_t> order(depth);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (masses[a] != masses[b]) return masses[a] > masses[b];
    return centroids[a] < centroids[b];
  });
  for (std::size_t j : order) {
    res.angles.push_back(centroids[j]);
    res.cell_masses.push_back(masses[j]);
  }
  return res;
}

Codebook lloyd_max_codebook(const AngularPdf& pdf, const ArrayGeometry& geom, std::size_t depth,
                            const LloydMaxOptions& opts) {
  return Codebook(geom, lloyd_max(pdf, depth, opts).angles);
}

}  // namespace iasim

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

#include <vector>

#include "iasim/angular_pdf.hpp"
#include "iasim/beamforming.hpp"

namespace iasim {

struct LloydMaxOptions {
  double tolerance = 1e-6;  // stop when distortion drops by less than this (rad^2)
  int max_iter = 500;
};

struct LloydMaxResult {
  std::vector<double> angles;       // test order: descending cell mass, ties by ascending angle
  std::vector<double> cell_masses;  // probability mass quantized to each angle
  std::vector<double> distortion;   // mean squared error, initial codebook first
  std::size_t requested_depth = 0;
  bool depth_reduced = false;  // fewer bins carried mass than requested beams
  int iterations = 0;
};

// Minimum-MSE quantizer of a full-circle pdf, started from the uniform
// angles. Partitions and centroids are taken on the circle.
LloydMaxResult lloyd_max(const AngularPdf& pdf, std::size_t depth, const LloydMaxOptions& opts = {});

Codebook lloyd_max_codebook(const AngularPdf& pdf, const ArrayGeometry& geom, std::size_t depth,
                            const LloydMaxOptions& opts = {});

}  // namespace iasim

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
#include <vector>

#include "iasim/angular_pdf.hpp"
#include "iasim/raster.hpp"

namespace iasim {

// Binary edge map (255 = edge) from 3x3 Prewitt gradients. A pixel is set
// when its gradient magnitude is nonzero and >= threshold * max magnitude.
// Border pixels are never set.
RasterImage prewitt_edges(const RasterImage& img, double threshold = 0.5);

// Votes in (rho, theta) space. Theta bins are centered at -90 deg + k * res
// for k in [0, 180 / res); rho bins are centered at multiples of rho_res.
class HoughAccumulator {
 public:
  HoughAccumulator(double theta_res_deg, double rho_res, double rho_max);

  std::size_t theta_bins() const { return n_theta_; }
  std::size_t rho_bins() const { return n_rho_; }
  double theta_res_deg() const { return theta_res_deg_; }
  double rho_res() const { return rho_res_; }

  double theta(std::size_t k) const;  // radians
  double rho(std::size_t r) const;
  std::size_t rho_index(double rho) const;

  std::uint32_t at(std::size_t rho_idx, std::size_t theta_idx) const {
    return counts_[theta_idx * n_rho_ + rho_idx];
  }
  void vote(std::size_t rho_idx, std::size_t theta_idx) { ++counts_[theta_idx * n_rho_ + rho_idx]; }

  std::uint64_t total() const;
  std::uint32_t column_max(std::size_t theta_idx) const;

 private:
  double theta_res_deg_;
  double rho_res_;
  std::size_t n_theta_;
  std::size_t n_rho_;
  std::size_t rho_offset_;
  std::vector<std::uint32_t> counts_;
};

// rho = x cos(theta) + y sin(theta) for every set pixel and every theta bin.
HoughAccumulator hough_transform(const RasterImage& edges, double theta_res_deg = 1.0, double rho_res = 1.0);

// Column maxima minus their minimum, normalized. Support is [-90, 90) deg.
// Throws DegeneratePdfError for an empty accumulator or flat column maxima.
AngularPdf hough_angle_pdf(const HoughAccumulator& acc);

// Places each orientation at theta and theta + 180 deg (half mass each),
// rotates by north_offset and rebins onto `out_bins` bins over [0, 2pi).
AngularPdf extend_and_rotate(const AngularPdf& half_pdf, double north_offset, std::size_t out_bins = 360);

// Prewitt -> binarize -> Hough -> column pdf -> extend and rotate.
AngularPdf map_angle_pdf(const RasterImage& img, double edge_threshold = 0.5, double theta_res_deg = 1.0,
                         double rho_res = 1.0, std::size_t out_bins = 360);

}  // namespace iasim

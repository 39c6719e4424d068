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

#include "iasim/hough.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "iasim/angles.hpp"
#include "iasim/errors.hpp"

namespace iasim {

RasterImage prewitt_edges(const RasterImage& img, double threshold) {
  if (img.width < 3 || img.height < 3) throw std::invalid_argument("prewitt_edges: image must be at least 3x3");
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw std::invalid_argument("prewitt_edges: threshold must be in [0, 1]");
  std::vector<double> mag(img.values.size(), 0.0);
  double max_mag = 0.0;
  for (int y = 1; y < img.height - 1; ++y) {
    for (int x = 1; x < img.width - 1; ++x) {
      auto v = [&](int dx, int dy) { return static_cast<double>(img.at(x + dx, y + dy)); };
      const double gx = (v(1, -1) + v(1, 0) + v(1, 1)) - (v(-1, -1) + v(-1, 0) + v(-1, 1));
      const double gy = (v(-1, 1) + v(0, 1) + v(1, 1)) - (v(-1, -1) + v(0, -1) + v(1, -1));
      const double m = std::sqrt(gx * gx + gy * gy);
      mag[static_cast<std::size_t>(y) * img.width + x] = m;
      max_mag = std::max(max_mag, m);
    }
  }
  RasterImage out(img.width, img.height, 0);
  out.pixel_size = img.pixel_size;
  out.north_offset = img.north_offset;
  if (max_mag == 0.0) return out;
  const double cut = threshold * max_mag;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    if (mag[i] > 0.0 && mag[i] >= cut) out.values[i] = 255;
  }
  return out;
}

HoughAccumulator::HoughAccumulator(double theta_res_deg, double rho_res, double rho_max)
    : theta_res_deg_(theta_res_deg), rho_res_(rho_res) {
  if (!(theta_res_deg > 0.0) || !(rho_res > 0.0)) throw std::invalid_argument("hough resolutions must be > 0");
  const double n = 180.0 / theta_res_deg;
  if (std::abs(n - std::round(n)) > 1e-9) throw std::invalid_argument("theta resolution must divide 180 degrees");
  n_theta_ = static_cast<std::size_t>(std::round(n));
  rho_offset_ = static_cast<std::size_t>(std::ceil(std::max(rho_max, 0.0) / rho_res));
  n_rho_ = 2 * rho_offset_ + 1;
  counts_.assign(n_theta_ * n_rho_, 0);
}

double HoughAccumulator::theta(std::size_t k) const {
  return deg2rad(-90.0 + theta_res_deg_ * static_cast<double>(k));
}

double HoughAccumulator::rho(std::size_t r) const {
  return (static_cast<double>(r) - static_cast<double>(rho_offset_)) * rho_res_;
}

std::size_t HoughAccumulator::rho_index(double rho) const {
  const long long r = std::llround(rho / rho_res_) + static_cast<long long>(rho_offset_);
  if (r < 0 || r >= static_cast<long long>(n_rho_)) throw std::out_of_range("rho outside accumulator");
  return static_cast<std::size_t>(r);
}

std::uint64_t HoughAccumulator::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint32_t HoughAccumulator::column_max(std::size_t theta_idx) const {
  const auto first = counts_.begin() + static_cast<std::ptrdiff_t>(theta_idx * n_rho_);
  return *std::max_element(first, first + static_cast<std::ptrdiff_t>(n_rho_));
}

HoughAccumulator hough_transform(const RasterImage& edges, double theta_res_deg, double rho_res) {
  const double rho_max = std::hypot(static_cast<double>(edges.width), static_cast<double>(edges.height));
  HoughAccumulator acc(theta_res_deg, rho_res, rho_max);
  std::vector<double> cs(acc.theta_bins()), sn(acc.theta_bins());
  for (std::size_t k = 0; k < acc.theta_bins(); ++k) {
    cs[k] = std::cos(acc.theta(k));
    sn[k] = std::sin(acc.theta(k));
  }
  for (int y = 0; y < edges.height; ++y) {
    for (int x = 0; x < edges.width; ++x) {
      if (edges.at(x, y) == 0) continue;
      for (std::size_t k = 0; k < acc.theta_bins(); ++k) {
        acc.vote(acc.rho_index(x * cs[k] + y * sn[k]), k);
      }
    }
  }
  return acc;
}

AngularPdf hough_angle_pdf(const HoughAccumulator& acc) {
  if (acc.total() == 0) throw DegeneratePdfError("hough accumulator is empty");
  std::vector<double> col(acc.theta_bins());
  for (std::size_t k = 0; k < col.size(); ++k) col[k] = acc.column_max(k);
  const double floor_value = *std::min_element(col.begin(), col.end());
  const double total = static_cast<double>(acc.total());
  for (double& c : col) c = (c - floor_value) / total;
  if (std::all_of(col.begin(), col.end(), [](double c) { return c == 0.0; })) {
    throw DegeneratePdfError("hough column maxima are flat; no dominant orientation");
  }
  return AngularPdf::from_weights(deg2rad(-90.0), deg2rad(acc.theta_res_deg()), std::move(col));
}

AngularPdf extend_and_rotate(const AngularPdf& half_pdf, double north_offset, std::size_t out_bins) {
  if (out_bins < 1) throw std::invalid_argument("extend_and_rotate: need >= 1 output bin");
  std::vector<double> out(out_bins, 0.0);
  const double w = kTwoPi / static_cast<double>(out_bins);
  auto place = [&](double angle, double mass) {
    const double a = wrap_2pi(angle + w / 2.0 + 1e-12);
    out[static_cast<std::size_t>(std::floor(a / w)) % out_bins] += mass;
  };
  for (std::size_t i = 0; i < half_pdf.size(); ++i) {
    const double m = half_pdf.mass(i);
    if (m == 0.0) continue;
    const double theta = half_pdf.center(i) + north_offset;
    place(theta, 0.5 * m);
    place(theta + kPi, 0.5 * m);
  }
  return AngularPdf::from_weights(0.0, w, std::move(out));
}

AngularPdf map_angle_pdf(const RasterImage& img, double edge_threshold, double theta_res_deg, double rho_res,
                         std::size_t out_bins) {
  const RasterImage edges = prewitt_edges(img, edge_threshold);
  const HoughAccumulator acc = hough_transform(edges, theta_res_deg, rho_res);
  return extend_and_rotate(hough_angle_pdf(acc), img.north_offset, out_bins);
}

}  // namespace iasim

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

#include "iasim/angular_pdf.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "iasim/angles.hpp"
#include "iasim/csv.hpp"
#include "iasim/errors.hpp"

namespace iasim {

AngularPdf::AngularPdf(double first_center, double bin_width, std::vector<double> masses)
    : first_center_(first_center), width_(bin_width), masses_(std::move(masses)) {
  if (masses_.empty()) throw std::invalid_argument("angular pdf needs >= 1 bin");
  if (!(width_ > 0.0)) throw std::invalid_argument("angular pdf bin width must be > 0");
  double total = 0.0;
  for (double m : masses_) {
    if (!(m >= 0.0)) throw std::invalid_argument("angular pdf masses must be nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("angular pdf masses must sum to 1");
}

AngularPdf AngularPdf::from_weights(double first_center, double bin_width, std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("angular pdf weights must be nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw DegeneratePdfError("angular pdf weights sum to zero");
  for (double& w : weights) w /= total;
  return AngularPdf(first_center, bin_width, std::move(weights));
}

AngularPdf AngularPdf::full_circle(std::vector<double> weights) {
  const double w = kTwoPi / static_cast<double>(weights.size());
  return from_weights(0.0, w, std::move(weights));
}

AngularPdf AngularPdf::uniform(std::size_t bins) {
  return full_circle(std::vector<double>(bins, 1.0));
}

std::vector<double> AngularPdf::bin_edges() const {
  std::vector<double> edges(size() + 1);
  for (std::size_t i = 0; i <= size(); ++i) edges[i] = first_center_ - width_ / 2.0 + width_ * static_cast<double>(i);
  return edges;
}

bool AngularPdf::is_full_circle() const {
  return std::abs(width_ * static_cast<double>(size()) - kTwoPi) < 1e-9;
}

std::size_t AngularPdf::bin_of(double angle) const {
  const double lower = first_center_ - width_ / 2.0;
  if (is_full_circle()) {
    const auto k = static_cast<std::size_t>(std::floor(wrap_2pi(angle - lower) / width_));
    return k % size();
  }
  const double k = std::floor((angle - lower) / width_);
  if (k < 0.0 || k >= static_cast<double>(size())) throw std::out_of_range("angle outside pdf support");
  return static_cast<std::size_t>(k);
}

AngularPdf rotate(const AngularPdf& pdf, double offset) {
  if (!pdf.is_full_circle()) throw std::invalid_argument("rotate: pdf must cover the full circle");
  std::vector<double> out(pdf.size(), 0.0);
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    // tiny nudge keeps exact multiples of the bin width from straddling an edge
    out[pdf.bin_of(pdf.center(i) + offset + 1e-12)] += pdf.mass(i);
  }
  return AngularPdf::from_weights(pdf.first_center(), pdf.bin_width(), std::move(out));
}

double quantization_mse(const AngularPdf& pdf, const std::vector<double>& angles) {
  if (angles.empty()) throw std::invalid_argument("quantization_mse: no angles");
  double mse = 0.0;
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    if (pdf.mass(i) == 0.0) continue;
    double best = INFINITY;
    for (double a : angles) best = std::min(best, circular_distance(pdf.center(i), a));
    mse += pdf.mass(i) * best * best;
  }
  return mse;
}

void save_pdf(const std::filesystem::path& path, const AngularPdf& pdf) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "angle_deg,mass\n";
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    out << csv::fmt(rad2deg(pdf.center(i))) << ',' << csv::fmt(pdf.mass(i)) << '\n';
  }
}

AngularPdf load_pdf(const std::filesystem::path& path) {
  std::vector<double> centers;
  std::vector<double> masses;
  bool header = false;
  csv::for_each_line(path, [&](std::string_view line, std::size_t number) {
    auto f = csv::split(line, ',');
    if (!header) {
      if (f != std::vector<std::string>{"angle_deg", "mass"}) throw ParseError("bad pdf header", number);
      header = true;
      return;
    }
    if (f.size() != 2) throw ParseError("expected angle_deg,mass", number);
    try {
      centers.push_back(csv::to_double(f[0]));
      masses.push_back(csv::to_double(f[1]));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
    if (centers.size() >= 2) {
      const double step = centers[1] - centers[0];
      const double got = centers.back() - centers[centers.size() - 2];
      if (!(step > 0.0) || std::abs(got - step) > 1e-6) throw ParseError("pdf bins must be equally spaced", number);
    }
  });
  if (centers.empty()) throw ParseError("pdf file has no bins", 1);
  const double width = centers.size() >= 2 ? deg2rad(centers[1] - centers[0]) : kTwoPi;
  return AngularPdf::from_weights(deg2rad(centers[0]), width, std::move(masses));
}

}  // namespace iasim

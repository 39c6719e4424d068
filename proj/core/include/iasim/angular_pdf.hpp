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

#include <filesystem>
#include <vector>

namespace iasim {

// Probability mass over equal-width angular bins. Bin i is centered at
// first_center + i * bin_width and covers [center - w/2, center + w/2).
// A full-circle pdf (n * w == 2pi) wraps; masses always sum to 1.
class AngularPdf {
 public:
  AngularPdf(double first_center, double bin_width, std::vector<double> masses);

  // Normalizes nonnegative weights; throws DegeneratePdfError if they sum to 0.
  static AngularPdf from_weights(double first_center, double bin_width, std::vector<double> weights);
  // Full circle with bin 0 centered at 0.
  static AngularPdf full_circle(std::vector<double> weights);
  static AngularPdf uniform(std::size_t bins);

  std::size_t size() const { return masses_.size(); }
  double bin_width() const { return width_; }
  double first_center() const { return first_center_; }
  double center(std::size_t i) const { return first_center_ + width_ * static_cast<double>(i); }
  double mass(std::size_t i) const { return masses_[i]; }
  const std::vector<double>& masses() const { return masses_; }
  std::vector<double> bin_edges() const;  // size() + 1 ascending edges

  bool is_full_circle() const;
  // Bin containing `angle`; full-circle pdfs wrap, others throw when outside.
  std::size_t bin_of(double angle) const;

 private:
  double first_center_;
  double width_;
  std::vector<double> masses_;
};

// Rotates a full-circle pdf by `offset`, rebinning onto its own grid.
AngularPdf rotate(const AngularPdf& pdf, double offset);

// Circular mean squared error of quantizing the pdf's bin centers to the
// nearest of `angles`.
double quantization_mse(const AngularPdf& pdf, const std::vector<double>& angles);

// CSV `angle_deg,mass`, one row per bin center.
void save_pdf(const std::filesystem::path& path, const AngularPdf& pdf);
AngularPdf load_pdf(const std::filesystem::path& path);

}  // namespace iasim

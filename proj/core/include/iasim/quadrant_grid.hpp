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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "iasim/angles.hpp"
#include "iasim/angular_pdf.hpp"
#include "iasim/beamforming.hpp"

namespace iasim {

struct GridSpec {
  Vec2 origin{};
  double cell_size = 50.0;  // m
  std::size_t bins = 64;    // angular histogram bins over [0, 2pi)
};

struct CellIndex {
  long long i = 0;
  long long j = 0;
  auto operator<=>(const CellIndex&) const = default;
};

struct AngleObservation {
  Vec2 position;
  double angle = 0.0;  // heading-relative, radians
};

// Per-cell angular histograms. Merging two grids with the same spec sums
// counts, so partial grids from parallel workers combine exactly.
class QuadrantGrid {
 public:
  explicit QuadrantGrid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  CellIndex cell_of(Vec2 position) const;

  void update(const AngleObservation& obs);
  void merge(const QuadrantGrid& other);
  void add_counts(CellIndex cell, const std::vector<std::uint64_t>& hist);

  bool empty() const { return counts_.empty(); }
  std::size_t cell_count() const { return counts_.size(); }
  const std::map<CellIndex, std::vector<std::uint64_t>>& counts() const { return counts_; }
  std::uint64_t observation_count(CellIndex cell) const;

  std::optional<AngularPdf> pdf(CellIndex cell) const;
  std::optional<AngularPdf> pdf_at(Vec2 position) const { return pdf(cell_of(position)); }

 private:
  GridSpec spec_;
  std::map<CellIndex, std::vector<std::uint64_t>> counts_;
};

// Bin count is 2pi / bin_width rounded to the nearest integer.
QuadrantGrid train_pcb(const std::vector<AngleObservation>& observations, Vec2 origin, double cell_size,
                       double bin_width);

// CSV `cell_i,cell_j,bin_index,mass,count` with a `#` metadata line holding
// the grid spec.
void save_grid(const std::filesystem::path& path, const QuadrantGrid& grid);
QuadrantGrid load_grid(const std::filesystem::path& path);

// Probability mass of each beam: every pdf bin goes to its angularly nearest
// beam (lowest index on ties).
std::vector<double> beam_masses(const AngularPdf& pdf, const std::vector<double>& beam_angles);

// Permutation sorting beams by descending mass, ties by ascending angle.
std::vector<std::size_t> pcb_order(const std::vector<double>& masses, const std::vector<double>& beam_angles);

// Uniform beam grid of `depth` beams, sorted most probable first.
Codebook pcb_codebook(const AngularPdf& pdf, const ArrayGeometry& geom, std::size_t depth);

}  // namespace iasim

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
#include <filesystem>
#include <vector>

#include "iasim/scenario.hpp"

namespace iasim {

// Grayscale raster, row-major. x is the column (east), y the row (south).
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;
  double pixel_size = 1.0;    // m per pixel
  double north_offset = 0.0;  // bearing of the image "up" direction, radians

  RasterImage() = default;
  RasterImage(int w, int h, std::uint8_t fill = 0);

  std::uint8_t at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count_nonzero() const;
};

// Binary P5 graymap (maxval <= 255).
RasterImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const RasterImage& img);

// Sidecar: `pixel_size = <m>` and `north_offset_deg = <deg>` lines.
void load_sidecar(const std::filesystem::path& path, RasterImage& img);
void save_sidecar(const std::filesystem::path& path, const RasterImage& img);

// Renders obstacle footprints (value 255) over a 0 background, north up.
RasterImage rasterize_map(const ScenarioMap& map, double pixel_size, double margin = 10.0);

}  // namespace iasim

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

#include "iasim/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "iasim/csv.hpp"
#include "iasim/errors.hpp"

namespace iasim {

RasterImage::RasterImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
  if (w < 0 || h < 0) throw std::invalid_argument("raster dimensions must be nonnegative");
  values.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

std::size_t RasterImage::count_nonzero() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](std::uint8_t v) { return v != 0; }));
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

}  // namespace

RasterImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (pgm_token(in) != "P5") throw ParseError("not a binary PGM (P5)", 1);
  const auto w = csv::to_int(pgm_token(in));
  const auto h = csv::to_int(pgm_token(in));
  const auto maxval = csv::to_int(pgm_token(in));
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) throw ParseError("unsupported PGM header", 1);
  RasterImage img(static_cast<int>(w), static_cast<int>(h));
  in.read(reinterpret_cast<char*>(img.values.data()), static_cast<std::streamsize>(img.values.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.values.size())) throw ParseError("truncated PGM data", 1);
  if (maxval != 255) {
    for (auto& v : img.values) v = static_cast<std::uint8_t>(std::lround(255.0 * v / static_cast<double>(maxval)));
  }
  return img;
}

void save_pgm(const std::filesystem::path& path, const RasterImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.values.data()), static_cast<std::streamsize>(img.values.size()));
}

void load_sidecar(const std::filesystem::path& path, RasterImage& img) {
  csv::for_each_line(path, [&](std::string_view line, std::size_t number) {
    auto kv = csv::split(line, '=');
    if (kv.size() != 2) throw ParseError("expected key = value", number);
    try {
      if (kv[0] == "pixel_size") {
        img.pixel_size = csv::to_double(kv[1]);
        if (!(img.pixel_size > 0.0)) throw std::invalid_argument("pixel_size must be > 0");
      } else if (kv[0] == "north_offset_deg") {
        img.north_offset = deg2rad(csv::to_double(kv[1]));
      } else {
        throw std::invalid_argument("unknown sidecar key '" + kv[0] + "'");
      }
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
  });
}

void save_sidecar(const std::filesystem::path& path, const RasterImage& img) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "pixel_size = " << csv::fmt(img.pixel_size) << '\n'
      << "north_offset_deg = " << csv::fmt(rad2deg(img.north_offset)) << '\n';
}

RasterImage rasterize_map(const ScenarioMap& map, double pixel_size, double margin) {
  if (!(pixel_size > 0.0)) throw std::invalid_argument("pixel_size must be > 0");
  if (map.empty()) return RasterImage(3, 3, 0);
  const Bounds b = map.bounds();
  const double x0 = b.min.x - margin;
  const double y1 = b.max.y + margin;
  const int w = static_cast<int>(std::ceil((b.max.x - b.min.x + 2.0 * margin) / pixel_size));
  const int h = static_cast<int>(std::ceil((b.max.y - b.min.y + 2.0 * margin) / pixel_size));
  RasterImage img(std::max(w, 3), std::max(h, 3), 0);
  img.pixel_size = pixel_size;
  for (const auto& ob : map.obstacles()) {
    const auto& poly = ob.footprint;
    // even-odd scanline fill at pixel centers
    for (int row = 0; row < img.height; ++row) {
      const double y = y1 - (row + 0.5) * pixel_size;
      std::vector<double> xs;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 c = poly[(i + 1) % poly.size()];
        if ((a.y <= y && c.y > y) || (c.y <= y && a.y > y)) {
          xs.push_back(a.x + (y - a.y) * (c.x - a.x) / (c.y - a.y));
        }
      }
      std::sort(xs.begin(), xs.end());
      for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        const int c0 = std::max(0, static_cast<int>(std::ceil((xs[k] - x0) / pixel_size - 0.5)));
        const int c1 = std::min(img.width - 1, static_cast<int>(std::floor((xs[k + 1] - x0) / pixel_size - 0.5)));
        for (int col = c0; col <= c1; ++col) img.at(col, row) = 255;
      }
    }
  }
  return img;
}

}  // namespace iasim

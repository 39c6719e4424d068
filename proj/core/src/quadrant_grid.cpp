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

#include "iasim/quadrant_grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "iasim/csv.hpp"
#include "iasim/errors.hpp"

namespace iasim {

QuadrantGrid::QuadrantGrid(GridSpec spec) : spec_(spec) {
  if (!(spec_.cell_size > 0.0)) throw std::invalid_argument("grid cell_size must be > 0");
  if (spec_.bins < 1) throw std::invalid_argument("grid needs >= 1 angular bin");
}

CellIndex QuadrantGrid::cell_of(Vec2 p) const {
  return {static_cast<long long>(std::floor((p.x - spec_.origin.x) / spec_.cell_size)),
          static_cast<long long>(std::floor((p.y - spec_.origin.y) / spec_.cell_size))};
}

void QuadrantGrid::update(const AngleObservation& obs) {
  const double w = kTwoPi / static_cast<double>(spec_.bins);
  const auto bin = static_cast<std::size_t>(std::floor(wrap_2pi(obs.angle + w / 2.0) / w)) % spec_.bins;
  auto& hist = counts_[cell_of(obs.position)];
  if (hist.empty()) hist.assign(spec_.bins, 0);
  ++hist[bin];
}

void QuadrantGrid::add_counts(CellIndex cell, const std::vector<std::uint64_t>& hist) {
  if (hist.size() != spec_.bins) throw std::invalid_argument("add_counts: histogram size mismatch");
  auto& mine = counts_[cell];
  if (mine.empty()) mine.assign(spec_.bins, 0);
  for (std::size_t k = 0; k < hist.size(); ++k) mine[k] += hist[k];
}

void QuadrantGrid::merge(const QuadrantGrid& other) {
  if (other.spec_.bins != spec_.bins || other.spec_.cell_size != spec_.cell_size ||
      !(other.spec_.origin == spec_.origin)) {
    throw std::invalid_argument("merge: grid specs differ");
  }
  for (const auto& [cell, hist] : other.counts_) add_counts(cell, hist);
}

std::uint64_t QuadrantGrid::observation_count(CellIndex cell) const {
  auto it = counts_.find(cell);
  if (it == counts_.end()) return 0;
  return std::accumulate(it->second.begin(), it->second.end(), std::uint64_t{0});
}

std::optional<AngularPdf> QuadrantGrid::pdf(CellIndex cell) const {
  auto it = counts_.find(cell);
  if (it == counts_.end()) return std::nullopt;
  std::vector<double> w(it->second.begin(), it->second.end());
  return AngularPdf::full_circle(std::move(w));
}

QuadrantGrid train_pcb(const std::vector<AngleObservation>& observations, Vec2 origin, double cell_size,
                       double bin_width) {
  if (!(bin_width > 0.0) || bin_width > kTwoPi) throw std::invalid_argument("bin_width must be in (0, 2pi]");
  const auto bins = static_cast<std::size_t>(std::max(1.0, std::round(kTwoPi / bin_width)));
  QuadrantGrid grid({origin, cell_size, bins});
  for (const auto& obs : observations) grid.update(obs);
  return grid;
}

void save_grid(const std::filesystem::path& path, const QuadrantGrid& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto& s = grid.spec();
  out << "# origin_x=" << csv::fmt(s.origin.x) << " origin_y=" << csv::fmt(s.origin.y)
      << " cell_size=" << csv::fmt(s.cell_size) << " bins=" << s.bins << '\n';
  out << "cell_i,cell_j,bin_index,mass,count\n";
  for (const auto& [cell, hist] : grid.counts()) {
    const double total = static_cast<double>(std::accumulate(hist.begin(), hist.end(), std::uint64_t{0}));
    for (std::size_t k = 0; k < hist.size(); ++k) {
      if (hist[k] == 0) continue;
      out << cell.i << ',' << cell.j << ',' << k << ',' << csv::fmt(static_cast<double>(hist[k]) / total) << ','
          << hist[k] << '\n';
    }
  }
}

QuadrantGrid load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string meta;
  std::getline(in, meta);
  GridSpec spec;
  {
    if (meta.rfind("#", 0) != 0) throw ParseError("missing grid metadata line", 1);
    std::istringstream ss(meta.substr(1));
    std::string kv;
    int found = 0;
    while (ss >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      if (key == "origin_x") spec.origin.x = csv::to_double(val), ++found;
      else if (key == "origin_y") spec.origin.y = csv::to_double(val), ++found;
      else if (key == "cell_size") spec.cell_size = csv::to_double(val), ++found;
      else if (key == "bins") spec.bins = static_cast<std::size_t>(csv::to_int(val)), ++found;
    }
    if (found != 4) throw ParseError("incomplete grid metadata", 1);
  }
  QuadrantGrid grid(spec);
  bool header = false;
  std::string line;
  std::size_t number = 1;
  std::map<CellIndex, std::vector<std::uint64_t>> counts;
  while (std::getline(in, line)) {
    ++number;
    const auto t = csv::trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto f = csv::split(t, ',');
    if (!header) {
      if (f != std::vector<std::string>{"cell_i", "cell_j", "bin_index", "mass", "count"}) {
        throw ParseError("bad grid header", number);
      }
      header = true;
      continue;
    }
    if (f.size() != 5) throw ParseError("expected 5 fields", number);
    try {
      const CellIndex cell{csv::to_int(f[0]), csv::to_int(f[1])};
      const auto bin = static_cast<std::size_t>(csv::to_int(f[2]));
      const auto count = csv::to_int(f[4]);
      if (bin >= spec.bins || count < 0) throw std::invalid_argument("bin or count out of range");
      auto& hist = counts[cell];
      if (hist.empty()) hist.assign(spec.bins, 0);
      hist[bin] += static_cast<std::uint64_t>(count);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
  }
  for (const auto& [cell, hist] : counts) grid.add_counts(cell, hist);
  return grid;
}

std::vector<double> beam_masses(const AngularPdf& pdf, const std::vector<double>& beam_angles) {
  if (beam_angles.empty()) throw std::invalid_argument("beam_masses: no beams");
  std::vector<double> out(beam_angles.size(), 0.0);
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    if (pdf.mass(i) == 0.0) continue;
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t b = 0; b < beam_angles.size(); ++b) {
      const double d = circular_distance(pdf.center(i), beam_angles[b]);
      if (d < best_d - 1e-12) {
        best_d = d;
        best = b;
      }
    }
    out[best] += pdf.mass(i);
  }
  return out;
}

std::vector<std::size_t> pcb_order(const std::vector<double>& masses, const std::vector<double>& beam_angles) {
  if (masses.size() != beam_angles.size()) throw std::invalid_argument("pcb_order: size mismatch");
  std::vector<std::size_t> order(masses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (masses[a] != masses[b]) return masses[a] > masses[b];
    return wrap_2pi(beam_angles[a]) < wrap_2pi(beam_angles[b]);
  });
  return order;
}

Codebook pcb_codebook(const AngularPdf& pdf, const ArrayGeometry& geom, std::size_t depth) {
  const auto angles = uniform_angles(depth);
  const auto order = pcb_order(beam_masses(pdf, angles), angles);
  return uniform_codebook(geom, depth).reordered(order);
}

}  // namespace iasim

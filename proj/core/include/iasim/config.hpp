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
#include <iosfwd>
#include <string>
#include <vector>

#include "iasim/beamforming.hpp"
#include "iasim/channel.hpp"
#include "iasim/ia.hpp"
#include "iasim/metrics.hpp"
#include "iasim/scenario.hpp"

namespace iasim {

enum class Strategy { exhaustive, gps_jump, gps_lms, pcb_trained, pcb_map };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct ScenarioSource {
  bool synthetic = true;
  ScenarioKind kind = ScenarioKind::crossroad;
  SyntheticParams params = SyntheticParams::defaults_for(ScenarioKind::crossroad);
  std::string traces_path;  // file-based scenarios
  std::string map_path;     // optional

  friend bool operator==(const ScenarioSource&, const ScenarioSource&) = default;
};

// Everything a campaign needs. Defaults follow the V2V parameter table
// (43 dBm EIRP, -85.5 dBm noise, 28 GHz, 400 MHz, 100 ms steps).
struct CampaignConfig {
  ScenarioSource scenario;
  PropagationConfig propagation;
  int n_rings = 4;
  int n_per_ring = 16;
  LinkBudget budget;

  std::vector<Strategy> strategies{Strategy::exhaustive, Strategy::gps_jump, Strategy::gps_lms,
                                   Strategy::pcb_trained, Strategy::pcb_map};
  std::size_t codebook_size = 64;
  SuccessRule rule;
  LmsParams lms;
  LatencyParams latency;
  double sigma_p = 4.0;    // m
  double min_range = 0.0;  // m
  double max_range = 200.0;
  bool require_los = true;
  int step_stride = 1;

  std::string grid_file;     // trained quadrant grid; trained in-process when empty
  std::string map_pdf_file;  // map-derived pdf; extracted from the scenario map when empty
  double cell_size = 50.0;
  std::size_t pdf_bins = 64;
  double map_pixel_size = 0.5;
  double edge_threshold = 0.5;

  std::vector<double> levels_deg{0.0, 5.0, 10.0, 15.0, 20.0};
  std::vector<QuantizerKind> quantizers{QuantizerKind::uniform, QuantizerKind::lloyd};
  std::string pdf_file;  // drives Lloyd-Max; derived from the campaign when empty
  std::size_t max_quantize_links = 1000;

  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string out_dir = "out";
  int threads = 1;

  ArrayGeometry geometry() const { return ArrayGeometry::standard(propagation.carrier_ghz, n_rings, n_per_ring); }
  // Throws std::invalid_argument with a message naming the offending key.
  void validate() const;

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

// INI-style text: [section] headers and key = value lines.
CampaignConfig parse_config(std::istream& in);
CampaignConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const CampaignConfig& cfg);

}  // namespace iasim

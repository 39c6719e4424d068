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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iasim/angular_pdf.hpp"
#include "iasim/config.hpp"
#include "iasim/ia.hpp"
#include "iasim/quadrant_grid.hpp"
#include "iasim/raster.hpp"
#include "iasim/scenario.hpp"

namespace iasim {

struct World {
  ScenarioMap map;
  std::vector<VehicleTrace> traces;
  double timestep = 0.1;
};

World load_world(const ScenarioSource& src);

// World used to train the quadrant grid in-process: the same layout with a
// different vehicle draw for synthetic scenarios, the campaign world itself
// for file scenarios.
World training_world(const ScenarioSource& src);

struct LinkKey {
  std::int64_t step = 0;
  std::string tx_id;
  std::string rx_id;
  Pose tx_pose;
  Pose rx_pose;
};

// Candidate links ordered by (step, tx_id, rx_id): every step_stride-th step,
// true distance within [min_range, max_range].
std::vector<LinkKey> campaign_links(const World& world, const CampaignConfig& cfg);

// Channel of an admitted link; nullopt when no path survives or, with
// require_los, when the direct path is blocked.
std::optional<ChannelMatrix> admit_channel(const World& world, const LinkKey& key, const CampaignConfig& cfg,
                                           const ArrayGeometry& geom);

// FNV-1a over the channel entries.
std::uint64_t channel_hash(const ChannelMatrix& h);

// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

// Per-strategy outcome of one link.
struct StrategyOutcome {
  IAResult result;
  double latency_ms = 0.0;
  bool fallback = false;  // pcb strategy ran in plain index order
};

struct LinkOutcome {
  LinkKey key;
  std::vector<StrategyOutcome> outcomes;  // one per configured strategy
};

// Priors the pcb strategies need; either may be absent (fallback order).
struct PcbInputs {
  std::optional<QuadrantGrid> grid;
  std::optional<AngularPdf> map_pdf;  // global bearings
};

PcbInputs prepare_pcb_inputs(const World& world, const CampaignConfig& cfg, std::ostream& log);

// Runs every configured strategy on the same channel of each admitted link.
std::vector<LinkOutcome> simulate_links(const World& world, const CampaignConfig& cfg, const PcbInputs& pcb);

// Observations of the best tx beam (and, by reciprocity, the best rx beam)
// of every link whose best SNR clears gamma_th; true positions.
std::vector<AngleObservation> training_observations(const World& world, const CampaignConfig& cfg);
QuadrantGrid train_grid(const World& world, const CampaignConfig& cfg);

// Map pdf of the world map rasterized at cfg.map_pixel_size.
AngularPdf world_map_pdf(const World& world, const CampaignConfig& cfg);

// Admitted channels for the quantization study, evenly thinned to
// cfg.max_quantize_links.
std::vector<QuantizationLink> quantization_links(const World& world, const CampaignConfig& cfg);

// Subcommands. Each writes into cfg.out_dir and returns the process exit
// code; warnings go to `log`.
int cmd_simulate(const CampaignConfig& cfg, std::ostream& log);
int cmd_train_pcb(const CampaignConfig& cfg, std::ostream& log);
int cmd_map_pcb(const CampaignConfig& cfg, const std::optional<std::filesystem::path>& raster,
                const std::optional<std::filesystem::path>& sidecar, std::ostream& log);
int cmd_quantize(const CampaignConfig& cfg, std::ostream& log);
int cmd_synth(const CampaignConfig& cfg, std::ostream& log);

inline constexpr int kExitDegeneratePdf = 3;

}  // namespace iasim

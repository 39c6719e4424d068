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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "iasim/campaign.hpp"
#include "iasim/config.hpp"

namespace {

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> threads;
};

iasim::CampaignConfig resolve(const GlobalFlags& flags) {
  iasim::CampaignConfig cfg = flags.config.empty() ? iasim::CampaignConfig{} : iasim::load_config(flags.config);
  if (flags.seed) {
    cfg.seed = *flags.seed;
    cfg.has_seed = true;
  }
  if (flags.out) cfg.out_dir = *flags.out;
  if (flags.threads) cfg.threads = *flags.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iasim - mmWave V2V initial access simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config, "campaign config (INI)")->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed, "campaign seed (overrides the config)");
  app.add_option("--out", flags.out, "output directory");
  app.add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "run IA strategies over the campaign");
  auto* train = app.add_subcommand("train-pcb", "train the quadrant grid");
  auto* map = app.add_subcommand("map-pcb", "extract the angular pdf from a map raster");
  std::optional<std::filesystem::path> raster, sidecar;
  map->add_option("--raster", raster, "PGM raster; the scenario map is rasterized when omitted")
      ->check(CLI::ExistingFile);
  map->add_option("--sidecar", sidecar, "raster metadata (pixel_size, north_offset_deg)")->check(CLI::ExistingFile);
  auto* quantize = app.add_subcommand("quantize", "codebook quantization loss sweep");
  auto* synth = app.add_subcommand("synth", "write the synthetic scenario as files");
  auto* dump = app.add_subcommand("config", "print the resolved config");

  CLI11_PARSE(app, argc, argv);

  try {
    const iasim::CampaignConfig cfg = resolve(flags);
    if (*dump) {
      std::cout << iasim::serialize_config(cfg);
      return 0;
    }
    if (*simulate) return iasim::cmd_simulate(cfg, std::cerr);
    if (*train) return iasim::cmd_train_pcb(cfg, std::cerr);
    if (*map) return iasim::cmd_map_pcb(cfg, raster, sidecar, std::cerr);
    if (*quantize) return iasim::cmd_quantize(cfg, std::cerr);
    if (*synth) return iasim::cmd_synth(cfg, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

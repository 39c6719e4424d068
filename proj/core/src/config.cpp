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

#include "iasim/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "iasim/csv.hpp"

namespace iasim {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::gps_jump: return "gps_jump";
    case Strategy::gps_lms: return "gps_lms";
    case Strategy::pcb_trained: return "pcb_trained";
    case Strategy::pcb_map: return "pcb_map";
  }
  return "exhaustive";
}

Strategy strategy_from_string(const std::string& s) {
  for (Strategy v : {Strategy::exhaustive, Strategy::gps_jump, Strategy::gps_lms, Strategy::pcb_trained,
                     Strategy::pcb_map}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

namespace {

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("not a boolean: '" + s + "'");
}

template <typename T, typename ToString>
std::string join(const std::vector<T>& items, ToString to_str) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += to_str(items[i]);
  }
  return out;
}

template <typename T, typename FromString>
std::vector<T> split_list(const std::string& s, FromString from_str) {
  std::vector<T> out;
  if (csv::trim(s).empty()) return out;
  for (const auto& tok : csv::split(s, ',')) out.push_back(from_str(tok));
  return out;
}

struct Binding {
  const char* section;
  const char* key;
  std::function<std::string(const CampaignConfig&)> get;
  std::function<void(CampaignConfig&, const std::string&)> set;
};

#define IASIM_DOUBLE(SEC, KEY, FIELD)                                        \
  Binding {                                                                  \
    SEC, KEY, [](const CampaignConfig& c) { return csv::fmt(c.FIELD); },     \
        [](CampaignConfig& c, const std::string& v) { c.FIELD = csv::to_double(v); } \
  }
#define IASIM_INT(SEC, KEY, FIELD, TYPE)                                                 \
  Binding {                                                                              \
    SEC, KEY, [](const CampaignConfig& c) { return std::to_string(c.FIELD); },           \
        [](CampaignConfig& c, const std::string& v) { c.FIELD = static_cast<TYPE>(csv::to_int(v)); } \
  }
#define IASIM_BOOL(SEC, KEY, FIELD)                                          \
  Binding {                                                                  \
    SEC, KEY, [](const CampaignConfig& c) { return fmt_bool(c.FIELD); },     \
        [](CampaignConfig& c, const std::string& v) { c.FIELD = parse_bool(v); } \
  }
#define IASIM_STRING(SEC, KEY, FIELD)                                        \
  Binding {                                                                  \
    SEC, KEY, [](const CampaignConfig& c) { return c.FIELD; },               \
        [](CampaignConfig& c, const std::string& v) { c.FIELD = v; }         \
  }

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table{
      Binding{"scenario", "source",
              [](const CampaignConfig& c) { return std::string(c.scenario.synthetic ? "synthetic" : "files"); },
              [](CampaignConfig& c, const std::string& v) {
                if (v != "synthetic" && v != "files") throw std::invalid_argument("source must be synthetic or files");
                c.scenario.synthetic = v == "synthetic";
              }},
      Binding{"scenario", "kind", [](const CampaignConfig& c) { return to_string(c.scenario.kind); },
              [](CampaignConfig& c, const std::string& v) { c.scenario.kind = scenario_kind_from_string(v); }},
      IASIM_DOUBLE("scenario", "extent", scenario.params.extent),
      IASIM_INT("scenario", "vehicles_per_lane", scenario.params.vehicles_per_lane, int),
      IASIM_DOUBLE("scenario", "max_speed", scenario.params.max_speed),
      IASIM_DOUBLE("scenario", "duration", scenario.params.duration),
      IASIM_DOUBLE("scenario", "timestep", scenario.params.timestep),
      IASIM_DOUBLE("scenario", "road_width", scenario.params.road_width),
      IASIM_DOUBLE("scenario", "lane_offset", scenario.params.lane_offset),
      IASIM_INT("scenario", "lanes_per_direction", scenario.params.lanes_per_direction, int),
      IASIM_DOUBLE("scenario", "roundabout_radius", scenario.params.roundabout_radius),
      IASIM_DOUBLE("scenario", "building_height", scenario.params.building_height),
      IASIM_DOUBLE("scenario", "block_length", scenario.params.block_length),
      IASIM_DOUBLE("scenario", "block_gap", scenario.params.block_gap),
      IASIM_DOUBLE("scenario", "block_depth", scenario.params.block_depth),
      IASIM_BOOL("scenario", "buildings", scenario.params.buildings),
      IASIM_INT("scenario", "layout_seed", scenario.params.seed, std::uint64_t),
      IASIM_STRING("scenario", "traces", scenario.traces_path),
      IASIM_STRING("scenario", "map", scenario.map_path),

      IASIM_DOUBLE("propagation", "carrier_ghz", propagation.carrier_ghz),
      IASIM_DOUBLE("propagation", "reflection_loss_db", propagation.reflection_loss_db),
      IASIM_BOOL("propagation", "include_reflections", propagation.include_reflections),
      IASIM_DOUBLE("propagation", "antenna_height", propagation.antenna_height),

      IASIM_INT("array", "n_rings", n_rings, int),
      IASIM_INT("array", "n_per_ring", n_per_ring, int),

      IASIM_DOUBLE("budget", "eirp_dbm", budget.eirp_dbm),
      IASIM_DOUBLE("budget", "noise_dbm", budget.noise_dbm),
      IASIM_DOUBLE("budget", "bandwidth_mhz", budget.bandwidth_mhz),

      Binding{"ia", "strategies",
              [](const CampaignConfig& c) { return join(c.strategies, [](Strategy s) { return to_string(s); }); },
              [](CampaignConfig& c, const std::string& v) {
                c.strategies = split_list<Strategy>(v, [](const std::string& s) { return strategy_from_string(s); });
              }},
      IASIM_INT("ia", "codebook_size", codebook_size, std::size_t),
      Binding{"ia", "success_rule",
              [](const CampaignConfig& c) {
                return std::string(c.rule.mode == SuccessMode::argmax_equivalence ? "argmax" : "snr_threshold");
              },
              [](CampaignConfig& c, const std::string& v) {
                if (v == "argmax") c.rule.mode = SuccessMode::argmax_equivalence;
                else if (v == "snr_threshold") c.rule.mode = SuccessMode::snr_threshold;
                else throw std::invalid_argument("success_rule must be argmax or snr_threshold");
              }},
      IASIM_DOUBLE("ia", "gamma_th_db", rule.gamma_th_db),
      IASIM_DOUBLE("ia", "sigma_p", sigma_p),
      IASIM_DOUBLE("ia", "min_range", min_range),
      IASIM_DOUBLE("ia", "max_range", max_range),
      IASIM_BOOL("ia", "require_los", require_los),
      IASIM_INT("ia", "step_stride", step_stride, int),

      IASIM_DOUBLE("lms", "eps_stop", lms.eps_stop),
      IASIM_INT("lms", "max_trials", lms.max_trials, int),
      IASIM_DOUBLE("lms", "eta0", lms.eta0),
      Binding{"lms", "gmax",
              [](const CampaignConfig& c) {
                return std::string(c.lms.gmax == GmaxMode::expected_pathloss ? "expected_pathloss" : "svd_genie");
              },
              [](CampaignConfig& c, const std::string& v) {
                if (v == "expected_pathloss") c.lms.gmax = GmaxMode::expected_pathloss;
                else if (v == "svd_genie") c.lms.gmax = GmaxMode::svd_genie;
                else throw std::invalid_argument("gmax must be expected_pathloss or svd_genie");
              }},
      IASIM_BOOL("lms", "snap_each_step", lms.snap_each_step),

      IASIM_INT("latency", "ssb_per_burst", latency.ssb_per_burst, int),
      IASIM_DOUBLE("latency", "slot_ms", latency.slot_ms),
      IASIM_DOUBLE("latency", "period_ms", latency.period_ms),

      IASIM_STRING("pcb", "grid_file", grid_file),
      IASIM_STRING("pcb", "map_pdf_file", map_pdf_file),
      IASIM_DOUBLE("pcb", "cell_size", cell_size),
      IASIM_INT("pcb", "pdf_bins", pdf_bins, std::size_t),
      IASIM_DOUBLE("pcb", "map_pixel_size", map_pixel_size),
      IASIM_DOUBLE("pcb", "edge_threshold", edge_threshold),

      Binding{"quantize", "levels_deg",
              [](const CampaignConfig& c) { return join(c.levels_deg, [](double d) { return csv::fmt(d); }); },
              [](CampaignConfig& c, const std::string& v) {
                c.levels_deg = split_list<double>(v, [](const std::string& s) { return csv::to_double(s); });
              }},
      Binding{"quantize", "quantizers",
              [](const CampaignConfig& c) {
                return join(c.quantizers, [](QuantizerKind q) { return to_string(q); });
              },
              [](CampaignConfig& c, const std::string& v) {
                c.quantizers =
                    split_list<QuantizerKind>(v, [](const std::string& s) { return quantizer_from_string(s); });
              }},
      IASIM_STRING("quantize", "pdf_file", pdf_file),
      IASIM_INT("quantize", "max_links", max_quantize_links, std::size_t),

      Binding{"campaign", "seed", [](const CampaignConfig& c) { return std::to_string(c.seed); },
              [](CampaignConfig& c, const std::string& v) {
                c.seed = static_cast<std::uint64_t>(csv::to_int(v));
                c.has_seed = true;
              }},
      IASIM_STRING("campaign", "out", out_dir),
      IASIM_INT("campaign", "threads", threads, int),
  };
  return table;
}

#undef IASIM_DOUBLE
#undef IASIM_INT
#undef IASIM_BOOL
#undef IASIM_STRING

}  // namespace

void CampaignConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: ") + what);
  };
  require(has_seed, "campaign.seed is mandatory");
  require(scenario.synthetic || !scenario.traces_path.empty(), "scenario.traces is required for file scenarios");
  if (!scenario.synthetic) {
    require(std::filesystem::exists(scenario.traces_path), "scenario.traces does not exist");
    require(scenario.map_path.empty() || std::filesystem::exists(scenario.map_path), "scenario.map does not exist");
  }
  require(grid_file.empty() || std::filesystem::exists(grid_file), "pcb.grid_file does not exist");
  require(map_pdf_file.empty() || std::filesystem::exists(map_pdf_file), "pcb.map_pdf_file does not exist");
  require(pdf_file.empty() || std::filesystem::exists(pdf_file), "quantize.pdf_file does not exist");
  require(codebook_size >= 1, "ia.codebook_size must be >= 1");
  require(sigma_p >= 0.0, "ia.sigma_p must be >= 0");
  require(max_range > 0.0 && min_range >= 0.0 && min_range < max_range, "ia ranges must satisfy 0 <= min < max");
  require(step_stride >= 1, "ia.step_stride must be >= 1");
  require(!strategies.empty(), "ia.strategies must list at least one strategy");
  require(threads >= 1, "campaign.threads must be >= 1");
  require(cell_size > 0.0, "pcb.cell_size must be > 0");
  require(pdf_bins >= 1, "pcb.pdf_bins must be >= 1");
  require(map_pixel_size > 0.0, "pcb.map_pixel_size must be > 0");
  require(edge_threshold >= 0.0 && edge_threshold <= 1.0, "pcb.edge_threshold must be in [0, 1]");
  require(lms.max_trials >= 1, "lms.max_trials must be >= 1");
  require(latency.ssb_per_burst >= 1, "latency.ssb_per_burst must be >= 1");
  for (double l : levels_deg) require(l >= 0.0 && l <= 360.0, "quantize.levels_deg must be in [0, 360]");
  propagation.validate();
  budget.validate();
  geometry();
}

CampaignConfig parse_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  std::map<std::string, const Binding*> lookup;
  for (const auto& b : bindings()) lookup[std::string(b.section) + "." + b.key] = &b;

  CampaignConfig cfg;
  // The scenario kind picks the synthetic defaults the other keys override.
  if (auto kind = tree.get_optional<std::string>("scenario.kind")) {
    cfg.scenario.kind = scenario_kind_from_string(*kind);
    cfg.scenario.params = SyntheticParams::defaults_for(cfg.scenario.kind);
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) throw std::invalid_argument("config: key outside a section: " + section);
    for (const auto& [key, value] : body) {
      const std::string name = section + "." + key;
      auto it = lookup.find(name);
      if (it == lookup.end()) throw std::invalid_argument("config: unknown key " + name);
      try {
        it->second->set(cfg, value.data());
      } catch (const std::exception& e) {
        throw std::invalid_argument("config: " + name + ": " + e.what());
      }
    }
  }
  cfg.lms.carrier_ghz = cfg.propagation.carrier_ghz;
  return cfg;
}

CampaignConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  return parse_config(in);
}

std::string serialize_config(const CampaignConfig& cfg) {
  std::ostringstream out;
  std::string section;
  for (const auto& b : bindings()) {
    if (std::string(b.section) == "campaign" && std::string(b.key) == "seed" && !cfg.has_seed) continue;
    if (section != b.section) {
      if (!section.empty()) out << '\n';
      section = b.section;
      out << '[' << section << "]\n";
    }
    out << b.key << " = " << b.get(cfg) << '\n';
  }
  return out.str();
}

}  // namespace iasim

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

#include "iasim/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "iasim/csv.hpp"
#include "iasim/errors.hpp"
#include "iasim/hough.hpp"
#include "iasim/metrics.hpp"

namespace iasim {

namespace fs = std::filesystem;

World load_world(const ScenarioSource& src) {
  if (src.synthetic) {
    Scenario s = generate_synthetic_scenario(src.kind, src.params);
    return {std::move(s.map), std::move(s.traces), src.params.timestep};
  }
  World w;
  w.timestep = src.params.timestep;
  w.traces = load_traces(src.traces_path, w.timestep);
  if (!src.map_path.empty()) w.map = load_map(src.map_path);
  return w;
}

World training_world(const ScenarioSource& src) {
  if (!src.synthetic) return load_world(src);
  ScenarioSource other = src;
  other.params.seed = src.params.seed + 1;
  return load_world(other);
}

std::vector<LinkKey> campaign_links(const World& world, const CampaignConfig& cfg) {
  std::vector<LinkKey> keys;
  if (world.traces.empty()) return keys;
  std::map<std::string, const VehicleTrace*> by_id;
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
  std::int64_t last = std::numeric_limits<std::int64_t>::min();
  for (const auto& tr : world.traces) {
    by_id[tr.vehicle_id] = &tr;
    if (!tr.samples.empty()) {
      first = std::min(first, tr.samples.front().step);
      last = std::max(last, tr.samples.back().step);
    }
  }
  if (first > last) return keys;
  for (std::int64_t step = first; step <= last; step += cfg.step_stride) {
    for (auto& pair : enumerate_link_pairs(world.traces, step, cfg.max_range)) {
      const Pose tx = *by_id.at(pair.tx_id)->at(step);
      const Pose rx = *by_id.at(pair.rx_id)->at(step);
      const double d = distance(tx.position(), rx.position());
      if (d < cfg.min_range || d <= 0.0) continue;
      keys.push_back({step, std::move(pair.tx_id), std::move(pair.rx_id), tx, rx});
    }
  }
  return keys;
}

std::optional<ChannelMatrix> admit_channel(const World& world, const LinkKey& key, const CampaignConfig& cfg,
                                           const ArrayGeometry& geom) {
  auto paths = enumerate_paths(world.map, key.tx_pose, key.rx_pose, cfg.propagation);
  if (paths.empty()) return std::nullopt;
  if (cfg.require_los && paths.front().kind != PathKind::los) return std::nullopt;
  return assemble_channel(paths, geom);
}

std::uint64_t channel_hash(const ChannelMatrix& h) {
  std::uint64_t hash = 1469598103934665603ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(h.entries.data());
  const std::size_t n = static_cast<std::size_t>(h.entries.size()) * sizeof(cdouble);
  for (std::size_t i = 0; i < n; ++i) {
    hash ^= bytes[i];
    hash *= 1099511628211ull;
  }
  return hash;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

PositionNoiseModel noise_model(const CampaignConfig& cfg) { return {cfg.sigma_p, cfg.seed}; }

LmsParams lms_params(const CampaignConfig& cfg) {
  LmsParams p = cfg.lms;
  p.carrier_ghz = cfg.propagation.carrier_ghz;
  return p;
}

double step_time(const World& world, std::int64_t step) { return static_cast<double>(step) * world.timestep; }

void ensure_out_dir(const CampaignConfig& cfg) { fs::create_directories(cfg.out_dir); }

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Histogram of angles on a full circle with bin 0 centered at 0.
std::optional<AngularPdf> histogram_pdf(const std::vector<double>& angles, std::size_t bins) {
  if (angles.empty()) return std::nullopt;
  std::vector<double> w(bins, 0.0);
  const double width = kTwoPi / static_cast<double>(bins);
  for (double a : angles) {
    auto b = static_cast<std::size_t>(std::floor(wrap_2pi(a + width / 2.0) / width));
    w[std::min(b, bins - 1)] += 1.0;
  }
  return AngularPdf::full_circle(std::move(w));
}

}  // namespace

PcbInputs prepare_pcb_inputs(const World& world, const CampaignConfig& cfg, std::ostream& log) {
  PcbInputs in;
  const auto wants = [&](Strategy s) {
    return std::find(cfg.strategies.begin(), cfg.strategies.end(), s) != cfg.strategies.end();
  };
  if (wants(Strategy::pcb_trained)) {
    if (!cfg.grid_file.empty()) {
      in.grid = load_grid(cfg.grid_file);
    } else {
      in.grid = train_grid(training_world(cfg.scenario), cfg);
      if (in.grid->empty()) log << "warning: in-process pcb training produced no observations\n";
    }
  }
  if (wants(Strategy::pcb_map)) {
    if (!cfg.map_pdf_file.empty()) {
      in.map_pdf = load_pdf(cfg.map_pdf_file);
    } else {
      try {
        in.map_pdf = world_map_pdf(world, cfg);
      } catch (const DegeneratePdfError& e) {
        log << "warning: map pdf unavailable (" << e.what() << "); pcb_map uses index order\n";
      }
    }
  }
  return in;
}

std::vector<LinkOutcome> simulate_links(const World& world, const CampaignConfig& cfg, const PcbInputs& pcb) {
  const ArrayGeometry geom = cfg.geometry();
  const Codebook codebook = uniform_codebook(geom, cfg.codebook_size);
  const auto keys = campaign_links(world, cfg);
  const PositionNoiseModel noise = noise_model(cfg);
  const LmsParams lms = lms_params(cfg);

  std::vector<std::optional<LinkOutcome>> slots(keys.size());
  parallel_for(keys.size(), cfg.threads, [&](std::size_t i) {
    const LinkKey& key = keys[i];
    auto channel = admit_channel(world, key, cfg, geom);
    if (!channel) return;
    const Vec2 ntx = measured_position(noise, key.tx_id, key.step, key.tx_pose.position());
    const Vec2 nrx = measured_position(noise, key.rx_id, key.step, key.rx_pose.position());
    const LinkContext ctx =
        LinkContext::make(std::move(*channel), codebook, codebook, geom, cfg.budget, key.tx_pose, key.rx_pose, ntx, nrx);
    const std::uint64_t hash = channel_hash(ctx.channel);

    LinkOutcome out{key, {}};
    for (Strategy s : cfg.strategies) {
      StrategyOutcome so;
      switch (s) {
        case Strategy::exhaustive: so.result = run_exhaustive(ctx, cfg.rule); break;
        case Strategy::gps_jump: so.result = run_gps_jump(ctx, cfg.rule); break;
        case Strategy::gps_lms: so.result = run_gps_lms(ctx, lms); break;
        case Strategy::pcb_trained:
          try {
            if (!pcb.grid) throw MissingQuadrantError("no grid");
            so.result = run_pcb(ctx, *pcb.grid, cfg.rule);
          } catch (const MissingQuadrantError&) {
            so.result = run_exhaustive(ctx, cfg.rule);
            so.fallback = true;
          }
          break;
        case Strategy::pcb_map:
          if (pcb.map_pdf) {
            so.result = run_pcb_map(ctx, *pcb.map_pdf, cfg.rule);
          } else {
            so.result = run_exhaustive(ctx, cfg.rule);
            so.fallback = true;
          }
          break;
      }
      if (channel_hash(ctx.channel) != hash) throw std::logic_error("channel changed between strategy runs");
      so.latency_ms = trials_to_latency(so.result.trials, cfg.latency);
      out.outcomes.push_back(std::move(so));
    }
    slots[i] = std::move(out);
  });

  std::vector<LinkOutcome> outcomes;
  for (auto& s : slots) {
    if (s) outcomes.push_back(std::move(*s));
  }
  return outcomes;
}

std::vector<AngleObservation> training_observations(const World& world, const CampaignConfig& cfg) {
  const ArrayGeometry geom = cfg.geometry();
  const Codebook codebook = uniform_codebook(geom, cfg.codebook_size);
  const auto keys = campaign_links(world, cfg);
  std::vector<std::vector<AngleObservation>> per_link(keys.size());
  parallel_for(keys.size(), cfg.threads, [&](std::size_t i) {
    const LinkKey& key = keys[i];
    auto channel = admit_channel(world, key, cfg, geom);
    if (!channel) return;
    const BeamGainTable g = compute_gain_table(*channel, codebook, codebook);
    if (snr_from_gain(g.max_gain, geom.n_elements(), cfg.budget) < cfg.rule.gamma_th_db) return;
    const auto best_tx = static_cast<std::size_t>(
        std::max_element(g.gain.begin(), g.gain.end()) - g.gain.begin());
    per_link[i].push_back({key.tx_pose.position(), codebook.angles()[best_tx]});
    per_link[i].push_back({key.rx_pose.position(), codebook.angles()[g.best_rx[best_tx]]});
  });
  std::vector<AngleObservation> all;
  for (auto& v : per_link) all.insert(all.end(), v.begin(), v.end());
  return all;
}

QuadrantGrid train_grid(const World& world, const CampaignConfig& cfg) {
  return train_pcb(training_observations(world, cfg), Vec2{0.0, 0.0}, cfg.cell_size,
                   kTwoPi / static_cast<double>(cfg.pdf_bins));
}

AngularPdf world_map_pdf(const World& world, const CampaignConfig& cfg) {
  if (world.map.empty()) throw DegeneratePdfError("scenario has no map");
  return map_angle_pdf(rasterize_map(world.map, cfg.map_pixel_size), cfg.edge_threshold);
}

std::vector<QuantizationLink> quantization_links(const World& world, const CampaignConfig& cfg) {
  const ArrayGeometry geom = cfg.geometry();
  const auto keys = campaign_links(world, cfg);
  std::vector<std::optional<ChannelMatrix>> channels(keys.size());
  parallel_for(keys.size(), cfg.threads, [&](std::size_t i) { channels[i] = admit_channel(world, keys[i], cfg, geom); });
  std::vector<QuantizationLink> admitted;
  for (auto& c : channels) {
    if (c) admitted.push_back({std::move(*c)});
  }
  if (admitted.size() <= cfg.max_quantize_links) return admitted;
  std::vector<QuantizationLink> thinned;
  const std::size_t n = admitted.size();
  for (std::size_t k = 0; k < cfg.max_quantize_links; ++k) thinned.push_back(std::move(admitted[k * n / cfg.max_quantize_links]));
  return thinned;
}

int cmd_simulate(const CampaignConfig& cfg, std::ostream& log) {
  cfg.validate();
  ensure_out_dir(cfg);
  const World world = load_world(cfg.scenario);
  const PcbInputs pcb = prepare_pcb_inputs(world, cfg, log);
  const auto links = simulate_links(world, cfg, pcb);
  if (links.empty()) log << "warning: no admitted links in range\n";

  const fs::path out_dir = cfg.out_dir;
  {
    auto out = open_out(out_dir / "ia_results.csv");
    out << "t,tx_id,rx_id,strategy,trials,success,final_snr_db,latency_ms\n";
    for (const auto& link : links) {
      for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
        const auto& o = link.outcomes[s];
        out << csv::fmt(step_time(world, link.key.step)) << ',' << link.key.tx_id << ',' << link.key.rx_id << ','
            << to_string(cfg.strategies[s]) << ',' << o.result.trials << ',' << (o.result.success ? 1 : 0) << ','
            << csv::fmt(o.result.final_snr_db) << ',' << csv::fmt(o.latency_ms) << '\n';
      }
    }
  }

  auto summary = open_out(out_dir / "summary.csv");
  summary << "strategy,n_links,n_success,failure_fraction,mean_trials,median_trials,mean_latency_ms,fallbacks\n";
  for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
    const std::string name = to_string(cfg.strategies[s]);
    std::vector<int> trials;
    double latency_sum = 0.0;
    std::size_t fallbacks = 0;
    for (const auto& link : links) {
      const auto& o = link.outcomes[s];
      if (o.fallback) ++fallbacks;
      if (!o.result.success) continue;
      trials.push_back(o.result.trials);
      latency_sum += o.latency_ms;
    }
    if (fallbacks > 0) log << "warning: " << name << " fell back to index order on " << fallbacks << " links\n";
    const fs::path ecdf_path = out_dir / ("ecdf_" + name + ".csv");
    const double n = static_cast<double>(links.size());
    const double ns = static_cast<double>(trials.size());
    double mean = 0.0, median = 0.0, mean_latency = 0.0;
    if (trials.empty()) {
      open_out(ecdf_path) << "trials,cum_prob\n";
    } else {
      const Ecdf e = ecdf(trials);
      save_ecdf(ecdf_path, e);
      for (int t : trials) mean += t;
      mean /= ns;
      median = e.median();
      mean_latency = latency_sum / ns;
    }
    summary << name << ',' << links.size() << ',' << trials.size() << ','
            << csv::fmt(links.empty() ? 0.0 : (n - ns) / n) << ',' << csv::fmt(mean) << ',' << csv::fmt(median) << ','
            << csv::fmt(mean_latency) << ',' << fallbacks << '\n';
  }
  return 0;
}

int cmd_train_pcb(const CampaignConfig& cfg, std::ostream& log) {
  cfg.validate();
  ensure_out_dir(cfg);
  const QuadrantGrid grid = train_grid(load_world(cfg.scenario), cfg);
  if (grid.empty()) log << "warning: no successful links; grid is empty\n";
  save_grid(fs::path(cfg.out_dir) / "pcb_grid.csv", grid);
  return 0;
}

int cmd_map_pcb(const CampaignConfig& cfg, const std::optional<fs::path>& raster,
                const std::optional<fs::path>& sidecar, std::ostream& log) {
  cfg.validate();
  ensure_out_dir(cfg);
  try {
    AngularPdf pdf = AngularPdf::uniform(1);
    if (raster) {
      RasterImage img = load_pgm(*raster);
      if (sidecar) load_sidecar(*sidecar, img);
      pdf = map_angle_pdf(img, cfg.edge_threshold);
    } else {
      pdf = world_map_pdf(load_world(cfg.scenario), cfg);
    }
    save_pdf(fs::path(cfg.out_dir) / "map_pdf.csv", pdf);
  } catch (const DegeneratePdfError& e) {
    log << "error: degenerate map pdf: " << e.what() << '\n';
    return kExitDegeneratePdf;
  }
  return 0;
}

int cmd_quantize(const CampaignConfig& cfg, std::ostream& log) {
  cfg.validate();
  ensure_out_dir(cfg);
  const World world = load_world(cfg.scenario);
  const auto links = quantization_links(world, cfg);
  if (links.empty()) {
    log << "warning: no admitted links for the quantization study\n";
    save_loss_report(fs::path(cfg.out_dir) / "loss_report.csv", {});
    return 0;
  }

  QuantizationSweepParams params{cfg.geometry(), cfg.budget, cfg.rule.gamma_th_db, AngularPdf::uniform(360),
                                 AngularPdf::uniform(360)};
  if (!cfg.pdf_file.empty()) {
    params.tx_pdf = load_pdf(cfg.pdf_file);
    params.rx_pdf = params.tx_pdf;
  } else {
    std::vector<double> aod, aoa;
    for (const auto& l : links) {
      const auto& p = l.channel.strongest_path();
      aod.push_back(p.aod_az);
      aoa.push_back(p.aoa_az);
    }
    if (auto pdf = histogram_pdf(aod, 360)) params.tx_pdf = *pdf;
    if (auto pdf = histogram_pdf(aoa, 360)) params.rx_pdf = *pdf;
  }
  save_loss_report(fs::path(cfg.out_dir) / "loss_report.csv",
                   quantization_sweep(links, cfg.levels_deg, cfg.quantizers, params));
  return 0;
}

int cmd_synth(const CampaignConfig& cfg, std::ostream& log) {
  cfg.validate();
  if (!cfg.scenario.synthetic) {
    log << "error: synth needs scenario.source = synthetic\n";
    return 2;
  }
  ensure_out_dir(cfg);
  const World world = load_world(cfg.scenario);
  const fs::path out_dir = cfg.out_dir;
  save_traces(out_dir / "traces.csv", world.traces);
  save_map(out_dir / "map.txt", world.map);
  const RasterImage img = rasterize_map(world.map, cfg.map_pixel_size);
  save_pgm(out_dir / "map.pgm", img);
  save_sidecar(out_dir / "map.meta", img);
  return 0;
}

}  // namespace iasim

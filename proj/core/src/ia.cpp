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

#include "iasim/ia.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "iasim/errors.hpp"

namespace iasim {

BeamGainTable compute_gain_table(const ChannelMatrix& h, const Codebook& tx, const Codebook& rx) {
  if (tx.matrix().rows() != h.entries.cols() || rx.matrix().rows() != h.entries.rows()) {
    throw std::invalid_argument("compute_gain_table: codebook and channel dimensions differ");
  }
  const Eigen::MatrixXcd hf = h.entries * tx.matrix();
  const Eigen::MatrixXd g = (rx.matrix().adjoint() * hf).cwiseAbs();
  BeamGainTable table;
  table.gain.resize(tx.depth());
  table.best_rx.resize(tx.depth());
  for (Eigen::Index t = 0; t < g.cols(); ++t) {
    Eigen::Index best = 0;
    for (Eigen::Index r = 1; r < g.rows(); ++r) {
      if (g(r, t) > g(best, t)) best = r;
    }
    table.gain[static_cast<std::size_t>(t)] = g(best, t);
    table.best_rx[static_cast<std::size_t>(t)] = static_cast<std::size_t>(best);
  }
  table.max_gain = *std::max_element(table.gain.begin(), table.gain.end());
  return table;
}

LinkContext LinkContext::make(ChannelMatrix channel, Codebook tx_codebook, Codebook rx_codebook,
                              const ArrayGeometry& geom, const LinkBudget& budget, const Pose& tx_pose,
                              const Pose& rx_pose, Vec2 noisy_tx_pos, Vec2 noisy_rx_pos) {
  if (tx_codebook.depth() < 1 || rx_codebook.depth() < 1) throw std::invalid_argument("codebooks must be non-empty");
  const auto n = static_cast<Eigen::Index>(geom.n_elements());
  if (channel.entries.rows() != n || channel.entries.cols() != n) {
    throw std::invalid_argument("channel dimensions do not match the array");
  }
  LinkContext ctx{std::move(channel), std::move(tx_codebook), std::move(rx_codebook), geom, budget,
                  tx_pose, rx_pose, noisy_tx_pos, noisy_rx_pos, {}};
  ctx.gains = compute_gain_table(ctx.channel, ctx.tx_codebook, ctx.rx_codebook);
  return ctx;
}

bool beam_succeeds(const LinkContext& ctx, std::size_t tx_index, const SuccessRule& rule) {
  const double g = ctx.gains.gain.at(tx_index);
  switch (rule.mode) {
    case SuccessMode::argmax_equivalence:
      return ctx.gains.max_gain > 0.0 && g >= ctx.gains.max_gain * (1.0 - 1e-9);
    case SuccessMode::snr_threshold:
      return snr_from_gain(g, ctx.geom.n_elements(), ctx.budget) >= rule.gamma_th_db;
  }
  return false;
}

IAResult run_ordered(const LinkContext& ctx, const std::vector<std::size_t>& order, const SuccessRule& rule) {
  IAResult res;
  std::size_t best_tested = order.empty() ? 0 : order.front();
  for (std::size_t i : order) {
    if (i >= ctx.tx_codebook.depth()) throw std::out_of_range("sweep order index out of range");
    res.trace.push_back({i, ctx.gains.gain[i]});
    ++res.trials;
    if (ctx.gains.gain[i] > ctx.gains.gain[best_tested]) best_tested = i;
    if (beam_succeeds(ctx, i, rule)) {
      res.success = true;
      best_tested = i;
      break;
    }
  }
  res.chosen_tx_index = best_tested;
  res.chosen_rx_index = ctx.gains.best_rx[best_tested];
  res.final_snr_db = snr_from_gain(ctx.gains.gain[best_tested], ctx.geom.n_elements(), ctx.budget);
  return res;
}

IAResult run_exhaustive(const LinkContext& ctx, const SuccessRule& rule) {
  std::vector<std::size_t> order(ctx.tx_codebook.depth());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return run_ordered(ctx, order, rule);
}

double position_prior_bearing(const LinkContext& ctx) {
  const Pose measured{ctx.noisy_tx_pos.x, ctx.noisy_tx_pos.y, ctx.tx_pose.heading, ctx.tx_pose.speed};
  if (ctx.noisy_tx_pos == ctx.noisy_rx_pos) return 0.0;
  return relative_bearing(measured, ctx.noisy_rx_pos);
}

std::vector<std::size_t> jump_sequence(const Codebook& cb, double prior_bearing) {
  const std::size_t n = cb.depth();
  std::vector<std::size_t> by_angle(n);
  std::iota(by_angle.begin(), by_angle.end(), std::size_t{0});
  std::stable_sort(by_angle.begin(), by_angle.end(),
                   [&](std::size_t a, std::size_t b) { return cb.angles()[a] < cb.angles()[b]; });
  const std::size_t start_index = cb.nearest(prior_bearing);
  const auto pos = static_cast<std::size_t>(
      std::find(by_angle.begin(), by_angle.end(), start_index) - by_angle.begin());

  std::vector<std::size_t> seq{by_angle[pos]};
  std::vector<bool> used(n, false);
  used[pos] = true;
  for (std::size_t step = 1; seq.size() < n; ++step) {
    for (std::size_t p : {(pos + step) % n, (pos + n - step % n) % n}) {
      if (!used[p]) {
        used[p] = true;
        seq.push_back(by_angle[p]);
      }
    }
  }
  return seq;
}

IAResult run_gps_jump(const LinkContext& ctx, const SuccessRule& rule) {
  return run_ordered(ctx, jump_sequence(ctx.tx_codebook, position_prior_bearing(ctx)), rule);
}

double lms_gmax(const LinkContext& ctx, const LmsParams& params) {
  if (params.gmax == GmaxMode::svd_genie) return svd_oracle(ctx.channel).sigma1;
  const double d = std::max(distance(ctx.noisy_tx_pos, ctx.noisy_rx_pos), 1.0);
  return ctx.geom.n_elements() * std::pow(10.0, -pathloss_los(d, params.carrier_ghz) / 20.0);
}

IAResult run_gps_lms(const LinkContext& ctx, const LmsParams& params) {
  if (params.max_trials < 1) throw std::invalid_argument("run_gps_lms: max_trials must be >= 1");
  IAResult res;
  const double gmax = lms_gmax(ctx, params);
  double theta = position_prior_bearing(ctx);
  double eta = params.eta0;
  double prev_eps = 0.0;
  for (int k = 0; k < params.max_trials; ++k) {
    const std::size_t snapped = ctx.tx_codebook.nearest(theta);
    const double probe = params.snap_each_step ? ctx.tx_codebook.angles()[snapped] : theta;
    const double gain = best_rx_beam(ctx.channel, beamformer_for_angle(ctx.geom, probe), ctx.rx_codebook).gain;
    res.trace.push_back({snapped, gain});
    ++res.trials;

    const double b = gain / gmax;
    const double eps = 1.0 - b;
    if (k > 0 && prev_eps != eps) eta = (prev_eps > eps ? 1.0 : -1.0) * eta;
    if (eps <= params.eps_stop) {
      res.success = true;
      break;
    }
    theta = wrap_2pi(theta + eta * eps * b);
    prev_eps = eps;
  }
  res.chosen_tx_index = ctx.tx_codebook.nearest(theta);
  res.chosen_rx_index = ctx.gains.best_rx[res.chosen_tx_index];
  res.final_snr_db = snr_from_gain(ctx.gains.gain[res.chosen_tx_index], ctx.geom.n_elements(), ctx.budget);
  return res;
}

IAResult run_pcb(const LinkContext& ctx, const AngularPdf& relative_pdf, const SuccessRule& rule) {
  const auto& angles = ctx.tx_codebook.angles();
  return run_ordered(ctx, pcb_order(beam_masses(relative_pdf, angles), angles), rule);
}

IAResult run_pcb(const LinkContext& ctx, const QuadrantGrid& grid, const SuccessRule& rule) {
  auto pdf = grid.pdf_at(ctx.noisy_tx_pos);
  if (!pdf) throw MissingQuadrantError("no trained quadrant at the transmitter position");
  return run_pcb(ctx, *pdf, rule);
}

IAResult run_pcb_map(const LinkContext& ctx, const AngularPdf& global_pdf, const SuccessRule& rule) {
  return run_pcb(ctx, rotate(global_pdf, -ctx.tx_pose.heading), rule);
}

double trials_to_latency(int trials, const LatencyParams& p) {
  if (trials < 1) throw std::invalid_argument("trials_to_latency: trials must be >= 1");
  if (p.ssb_per_burst < 1) throw std::invalid_argument("trials_to_latency: ssb_per_burst must be >= 1");
  const int k = trials - 1;
  return (k / p.ssb_per_burst) * p.period_ms + (k % p.ssb_per_burst) * p.slot_ms + p.slot_ms;
}

}  // namespace iasim

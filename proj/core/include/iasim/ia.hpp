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

#include <optional>
#include <vector>

#include "iasim/angular_pdf.hpp"
#include "iasim/beamforming.hpp"
#include "iasim/quadrant_grid.hpp"
#include "iasim/scenario.hpp"

namespace iasim {

// Best receive beam and gain for every transmit beam of a link, computed once
// so strategies share one evaluation of the channel.
struct BeamGainTable {
  std::vector<double> gain;         // per tx index: max over rx beams of |w^H H f|
  std::vector<std::size_t> best_rx; // per tx index
  double max_gain = 0.0;
};

BeamGainTable compute_gain_table(const ChannelMatrix& h, const Codebook& tx, const Codebook& rx);

struct LinkContext {
  ChannelMatrix channel;
  Codebook tx_codebook;
  Codebook rx_codebook;
  ArrayGeometry geom;
  LinkBudget budget;
  Pose tx_pose;
  Pose rx_pose;
  Vec2 noisy_tx_pos;
  Vec2 noisy_rx_pos;
  BeamGainTable gains;

  // Validates codebooks against the geometry and fills `gains`.
  static LinkContext make(ChannelMatrix channel, Codebook tx_codebook, Codebook rx_codebook,
                          const ArrayGeometry& geom, const LinkBudget& budget, const Pose& tx_pose,
                          const Pose& rx_pose, Vec2 noisy_tx_pos, Vec2 noisy_rx_pos);
};

enum class SuccessMode { argmax_equivalence, snr_threshold };

struct SuccessRule {
  SuccessMode mode = SuccessMode::argmax_equivalence;
  double gamma_th_db = 0.0;

  friend bool operator==(const SuccessRule&, const SuccessRule&) = default;
};

struct TrialRecord {
  std::size_t tx_index = 0;
  double gain = 0.0;
};

struct IAResult {
  int trials = 0;
  bool success = false;
  std::size_t chosen_tx_index = 0;  // index into the context's tx codebook
  std::size_t chosen_rx_index = 0;
  double final_snr_db = kNoSignalDb;
  std::vector<TrialRecord> trace;
};

// True when tx beam `tx_index` (with its best rx beam) satisfies the rule.
bool beam_succeeds(const LinkContext& ctx, std::size_t tx_index, const SuccessRule& rule);

// Sweeps tx beams in the given order and stops at the first success.
IAResult run_ordered(const LinkContext& ctx, const std::vector<std::size_t>& order, const SuccessRule& rule);

// Codebook index order 0, 1, 2, ...
IAResult run_exhaustive(const LinkContext& ctx, const SuccessRule& rule);

// Bearing of the receiver as seen from the transmitter's measured position,
// relative to the transmitter heading.
double position_prior_bearing(const LinkContext& ctx);

// start, start+1, start-1, start+2, start-2, ... over beams sorted by angle,
// where `start` is the beam nearest the position prior.
std::vector<std::size_t> jump_sequence(const Codebook& cb, double prior_bearing);
IAResult run_gps_jump(const LinkContext& ctx, const SuccessRule& rule);

enum class GmaxMode { expected_pathloss, svd_genie };

struct LmsParams {
  double eps_stop = 0.5;
  int max_trials = 64;
  double eta0 = 0.05;
  GmaxMode gmax = GmaxMode::expected_pathloss;
  double carrier_ghz = 28.0;   // for the expected-pathloss G_max
  bool snap_each_step = false; // probe only codebook angles

  friend bool operator==(const LmsParams&, const LmsParams&) = default;
};

double lms_gmax(const LinkContext& ctx, const LmsParams& params);

// Adaptive search: theta_{k+1} = theta_k + eta_k eps_k b_k with b_k the
// measured gain over G_max and eps_k = 1 - b_k.
IAResult run_gps_lms(const LinkContext& ctx, const LmsParams& params = {});

// Exhaustive over the tx codebook reordered by a heading-relative pdf.
IAResult run_pcb(const LinkContext& ctx, const AngularPdf& relative_pdf, const SuccessRule& rule);
// Looks up the cell containing the measured tx position; throws
// MissingQuadrantError when the grid has no data there.
IAResult run_pcb(const LinkContext& ctx, const QuadrantGrid& grid, const SuccessRule& rule);
// Map pdfs hold global bearings; they are rotated into the tx heading frame.
IAResult run_pcb_map(const LinkContext& ctx, const AngularPdf& global_pdf, const SuccessRule& rule);

struct LatencyParams {
  int ssb_per_burst = 64;
  double slot_ms = 0.125;
  double period_ms = 160.0;

  friend bool operator==(const LatencyParams&, const LatencyParams&) = default;
};

double trials_to_latency(int trials, const LatencyParams& params = {});

}  // namespace iasim

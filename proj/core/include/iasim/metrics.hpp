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

#include <filesystem>
#include <string>
#include <vector>

#include "iasim/angular_pdf.hpp"
#include "iasim/beamforming.hpp"

namespace iasim {

class Ecdf {
 public:
  Ecdf(std::vector<double> support, std::vector<double> cum_prob);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& cum_prob() const { return cum_prob_; }

  // P(X <= x)
  double operator()(double x) const;
  // Smallest support value whose cumulative probability reaches p.
  double quantile(double p) const;
  double median() const { return quantile(0.5); }

 private:
  std::vector<double> support_;
  std::vector<double> cum_prob_;
};

Ecdf ecdf(const std::vector<double>& samples);
Ecdf ecdf(const std::vector<int>& samples);

// CSV `trials,cum_prob`.
void save_ecdf(const std::filesystem::path& path, const Ecdf& e);

// mean(opt - q) in dB.
double snr_loss(const std::vector<double>& optimal_db, const std::vector<double>& quantized_db);
// mean(log2(1 + opt) - log2(1 + q)) with linear SNRs.
double se_loss(const std::vector<double>& optimal_db, const std::vector<double>& quantized_db);

enum class QuantizerKind { uniform, lloyd };
std::string to_string(QuantizerKind q);
QuantizerKind quantizer_from_string(const std::string& s);

// One channel realization for the quantization study. Direction priors are
// the heading-relative angles of the strongest path.
struct QuantizationLink {
  ChannelMatrix channel;
};

struct LossReport {
  double level_deg = 0.0;
  QuantizerKind quantizer = QuantizerKind::uniform;
  double snr_loss_db = 0.0;
  double se_loss_bps_hz = 0.0;
  std::size_t n_links = 0;
};

struct QuantizationSweepParams {
  ArrayGeometry geom;
  LinkBudget budget;
  double gamma_th_db = 0.0;
  AngularPdf tx_pdf = AngularPdf::uniform(360);  // drives the Lloyd-Max codebook
  AngularPdf rx_pdf = AngularPdf::uniform(360);
};

// Per-link SNRs for one codebook pair: oracle and best codebook pair.
struct LinkSnr {
  double optimal_db = 0.0;
  double quantized_db = 0.0;
};

// Level 0 beams point exactly along the strongest path; other levels use the
// best (tx, rx) pair of the codebooks. Links whose oracle SNR is below
// gamma_th are dropped.
std::vector<LossReport> quantization_sweep(const std::vector<QuantizationLink>& links,
                                           const std::vector<double>& levels_deg,
                                           const std::vector<QuantizerKind>& quantizers,
                                           const QuantizationSweepParams& params);

// Per-link values behind one report row (for inspection and tests).
std::vector<LinkSnr> quantization_link_snrs(const std::vector<QuantizationLink>& links, double level_deg,
                                            QuantizerKind quantizer, const QuantizationSweepParams& params);

// CSV `level_deg,quantizer,snr_loss_db,se_loss_bps_hz,n_links`.
void save_loss_report(const std::filesystem::path& path, const std::vector<LossReport>& rows);

}  // namespace iasim

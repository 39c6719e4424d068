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

#include "iasim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "iasim/csv.hpp"
#include "iasim/lloyd_max.hpp"

namespace iasim {

Ecdf::Ecdf(std::vector<double> support, std::vector<double> cum_prob)
    : support_(std::move(support)), cum_prob_(std::move(cum_prob)) {
  if (support_.empty() || support_.size() != cum_prob_.size()) throw std::invalid_argument("ecdf: bad sizes");
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (!(support_[i] > support_[i - 1]) || cum_prob_[i] < cum_prob_[i - 1]) {
      throw std::invalid_argument("ecdf: support and probabilities must be ascending");
    }
  }
  if (std::abs(cum_prob_.back() - 1.0) > 1e-12) throw std::invalid_argument("ecdf: must end at 1");
}

double Ecdf::operator()(double x) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), x);
  if (it == support_.begin()) return 0.0;
  return cum_prob_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double Ecdf::quantile(double p) const {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (cum_prob_[i] >= p - 1e-12) return support_[i];
  }
  return support_.back();
}

Ecdf ecdf(const std::vector<double>& samples) {
  if (samples.empty()) throw std::invalid_argument("ecdf: no samples");
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  std::vector<double> support, prob;
  const double n = static_cast<double>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
    support.push_back(s[i]);
    prob.push_back(static_cast<double>(i + 1) / n);
  }
  prob.back() = 1.0;
  return Ecdf(std::move(support), std::move(prob));
}

Ecdf ecdf(const std::vector<int>& samples) {
  return ecdf(std::vector<double>(samples.begin(), samples.end()));
}

void save_ecdf(const std::filesystem::path& path, const Ecdf& e) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "trials,cum_prob\n";
  for (std::size_t i = 0; i < e.support().size(); ++i) {
    out << csv::fmt(e.support()[i]) << ',' << csv::fmt(e.cum_prob()[i]) << '\n';
  }
}

double snr_loss(const std::vector<double>& opt, const std::vector<double>& q) {
  if (opt.size() != q.size()) throw std::invalid_argument("snr_loss: length mismatch");
  if (opt.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < opt.size(); ++i) sum += opt[i] - q[i];
  return sum / static_cast<double>(opt.size());
}

double se_loss(const std::vector<double>& opt, const std::vector<double>& q) {
  if (opt.size() != q.size()) throw std::invalid_argument("se_loss: length mismatch");
  if (opt.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < opt.size(); ++i) sum += spectral_efficiency(opt[i]) - spectral_efficiency(q[i]);
  return sum / static_cast<double>(opt.size());
}

std::string to_string(QuantizerKind q) { return q == QuantizerKind::uniform ? "uniform" : "lloyd"; }

QuantizerKind quantizer_from_string(const std::string& s) {
  if (s == "uniform") return QuantizerKind::uniform;
  if (s == "lloyd") return QuantizerKind::lloyd;
  throw std::invalid_argument("unknown quantizer '" + s + "'");
}

namespace {

struct CodebookPair {
  Codebook tx;
  Codebook rx;
};

CodebookPair build_codebooks(double level_deg, QuantizerKind quantizer, const QuantizationSweepParams& p) {
  const std::size_t depth = codebook_depth(deg2rad(level_deg));
  if (quantizer == QuantizerKind::uniform) {
    return {uniform_codebook(p.geom, depth), uniform_codebook(p.geom, depth)};
  }
  return {lloyd_max_codebook(p.tx_pdf, p.geom, depth), lloyd_max_codebook(p.rx_pdf, p.geom, depth)};
}

double best_pair_gain(const ChannelMatrix& h, const CodebookPair& cbs) {
  const Eigen::MatrixXcd g = cbs.rx.matrix().adjoint() * (h.entries * cbs.tx.matrix());
  return g.cwiseAbs().maxCoeff();
}

std::vector<double> oracle_snrs(const std::vector<QuantizationLink>& links, const QuantizationSweepParams& p) {
  std::vector<double> out;
  out.reserve(links.size());
  for (const auto& link : links) {
    out.push_back(snr_from_gain(svd_oracle(link.channel).sigma1, p.geom.n_elements(), p.budget));
  }
  return out;
}

std::vector<LinkSnr> link_snrs(const std::vector<QuantizationLink>& links, const std::vector<double>& oracle_db,
                               double level_deg, QuantizerKind quantizer, const QuantizationSweepParams& p) {
  if (level_deg < 0.0) throw std::invalid_argument("quantization level must be >= 0");
  const int n = p.geom.n_elements();
  std::optional<CodebookPair> cbs;
  if (level_deg > 0.0) cbs = build_codebooks(level_deg, quantizer, p);

  std::vector<LinkSnr> out;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& link = links[i];
    const double opt = oracle_db[i];
    if (!(opt >= p.gamma_th_db)) continue;
    double gain = 0.0;
    if (cbs) {
      gain = best_pair_gain(link.channel, *cbs);
    } else {
      const auto& path = link.channel.strongest_path();
      gain = beam_gain(beamformer_for_angle(p.geom, path.aoa_az, path.aoa_el), link.channel,
                       beamformer_for_angle(p.geom, path.aod_az, path.aod_el));
    }
    out.push_back({opt, snr_from_gain(gain, n, p.budget)});
  }
  return out;
}

}  // namespace

std::vector<LinkSnr> quantization_link_snrs(const std::vector<QuantizationLink>& links, double level_deg,
                                            QuantizerKind quantizer, const QuantizationSweepParams& p) {
  return link_snrs(links, oracle_snrs(links, p), level_deg, quantizer, p);
}

std::vector<LossReport> quantization_sweep(const std::vector<QuantizationLink>& links,
                                           const std::vector<double>& levels_deg,
                                           const std::vector<QuantizerKind>& quantizers,
                                           const QuantizationSweepParams& p) {
  if (links.empty()) throw std::invalid_argument("quantization_sweep: empty campaign");
  const std::vector<double> oracle_db = oracle_snrs(links, p);
  std::vector<LossReport> rows;
  for (double level : levels_deg) {
    for (QuantizerKind q : quantizers) {
      const auto snrs = link_snrs(links, oracle_db, level, q, p);
      std::vector<double> opt, quant;
      for (const auto& s : snrs) {
        opt.push_back(s.optimal_db);
        quant.push_back(s.quantized_db);
      }
      rows.push_back({level, q, snr_loss(opt, quant), se_loss(opt, quant), snrs.size()});
    }
  }
  return rows;
}

void save_loss_report(const std::filesystem::path& path, const std::vector<LossReport>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "level_deg,quantizer,snr_loss_db,se_loss_bps_hz,n_links\n";
  for (const auto& r : rows) {
    out << csv::fmt(r.level_deg) << ',' << to_string(r.quantizer) << ',' << csv::fmt(r.snr_loss_db) << ','
        << csv::fmt(r.se_loss_bps_hz) << ',' << r.n_links << '\n';
  }
}

}  // namespace iasim

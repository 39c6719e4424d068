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

#include "iasim/beamforming.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "iasim/csv.hpp"
#include "iasim/errors.hpp"

namespace iasim {

Beamformer::Beamformer(Eigen::VectorXcd weights) : weights_(std::move(weights)) {
  const double n = weights_.norm();
  if (!(n > 0.0)) throw std::invalid_argument("beamformer weights must be nonzero");
  weights_ /= n;
}

Beamformer beamformer_for_angle(const ArrayGeometry& geom, double az, double el) {
  return Beamformer(steering_vector(geom, az, el));
}

Codebook::Codebook(const ArrayGeometry& geom, std::vector<double> angles) : angles_(std::move(angles)) {
  if (angles_.empty()) throw std::invalid_argument("codebook needs at least one beam");
  matrix_.resize(geom.n_elements(), static_cast<Eigen::Index>(angles_.size()));
  beams_.reserve(angles_.size());
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    angles_[i] = wrap_2pi(angles_[i]);
    beams_.push_back(beamformer_for_angle(geom, angles_[i]));
    matrix_.col(static_cast<Eigen::Index>(i)) = beams_.back().weights();
  }
}

Codebook Codebook::reordered(const std::vector<std::size_t>& order) const {
  if (order.size() != depth()) throw std::invalid_argument("reorder: permutation size mismatch");
  std::vector<bool> seen(depth(), false);
  Codebook out;
  out.matrix_.resize(matrix_.rows(), matrix_.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (i >= depth() || seen[i]) throw std::invalid_argument("reorder: not a permutation");
    seen[i] = true;
    out.angles_.push_back(angles_[i]);
    out.beams_.push_back(beams_[i]);
    out.matrix_.col(static_cast<Eigen::Index>(k)) = matrix_.col(static_cast<Eigen::Index>(i));
  }
  return out;
}

std::size_t Codebook::nearest(double az) const {
  std::size_t best = 0;
  double best_d = INFINITY;
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    const double d = circular_distance(angles_[i], az);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::vector<double> uniform_angles(std::size_t n_beams) {
  if (n_beams < 1) throw std::invalid_argument("uniform codebook needs >= 1 beam");
  std::vector<double> out(n_beams);
  for (std::size_t i = 0; i < n_beams; ++i) out[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n_beams);
  return out;
}

Codebook uniform_codebook(const ArrayGeometry& geom, std::size_t n_beams) {
  return Codebook(geom, uniform_angles(n_beams));
}

std::size_t codebook_depth(double theta_q) {
  if (!(theta_q > 0.0) || theta_q > kTwoPi * (1.0 + 1e-12)) {
    throw std::domain_error("codebook_depth: theta_q must be in (0, 2pi]");
  }
  // guard against 2pi/theta_q landing a hair above an integer
  const double ratio = kTwoPi / theta_q;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) < 1e-9 * rounded) return static_cast<std::size_t>(rounded);
  return static_cast<std::size_t>(std::ceil(ratio));
}

void LinkBudget::validate() const {
  if (!(bandwidth_mhz > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
}

double beam_gain(const Beamformer& w, const ChannelMatrix& h, const Beamformer& f) {
  if (w.size() != h.entries.rows() || f.size() != h.entries.cols()) {
    throw std::invalid_argument("beam_gain: dimension mismatch");
  }
  return std::abs(w.weights().dot(h.entries * f.weights()));
}

double snr_from_gain(double gain, int n_elements, const LinkBudget& budget) {
  if (!(gain > 0.0)) return kNoSignalDb;
  return 10.0 * std::log10(gain * gain / n_elements) + budget.eirp_dbm - budget.noise_dbm;
}

double snr_db(const Beamformer& w, const ChannelMatrix& h, const Beamformer& f, const LinkBudget& budget) {
  return snr_from_gain(beam_gain(w, h, f), static_cast<int>(h.entries.rows()), budget);
}

RxChoice best_rx_beam(const ChannelMatrix& h, const Beamformer& f, const Codebook& rx_codebook) {
  if (rx_codebook.depth() == 0) throw std::invalid_argument("best_rx_beam: empty codebook");
  if (f.size() != h.entries.cols() || rx_codebook.matrix().rows() != h.entries.rows()) {
    throw std::invalid_argument("best_rx_beam: dimension mismatch");
  }
  const Eigen::VectorXcd y = h.entries * f.weights();
  const Eigen::VectorXd gains = (rx_codebook.matrix().adjoint() * y).cwiseAbs();
  RxChoice best{0, gains(0)};
  for (Eigen::Index i = 1; i < gains.size(); ++i) {
    if (gains(i) > best.gain) best = {static_cast<std::size_t>(i), gains(i)};
  }
  return best;
}

SvdOptimum svd_oracle(const ChannelMatrix& h) {
  if (h.entries.size() == 0 || h.entries.cwiseAbs().maxCoeff() == 0.0) {
    throw std::invalid_argument("svd_oracle: zero channel matrix");
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(h.entries, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {Beamformer(svd.matrixV().col(0)), Beamformer(svd.matrixU().col(0)), svd.singularValues()(0)};
}

double spectral_efficiency(double snr_db) {
  return std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

void save_codebook(const std::filesystem::path& path, const Codebook& cb) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "order,angle_deg\n";
  for (std::size_t i = 0; i < cb.depth(); ++i) out << i << ',' << csv::fmt(rad2deg(cb.angles()[i])) << '\n';
}

Codebook load_codebook(const std::filesystem::path& path, const ArrayGeometry& geom) {
  std::map<long long, double> rows;
  bool header = false;
  csv::for_each_line(path, [&](std::string_view line, std::size_t number) {
    auto f = csv::split(line, ',');
    if (!header) {
      if (f != std::vector<std::string>{"order", "angle_deg"}) throw ParseError("bad codebook header", number);
      header = true;
      return;
    }
    if (f.size() != 2) throw ParseError("expected order,angle_deg", number);
    try {
      const long long order = csv::to_int(f[0]);
      if (!rows.emplace(order, deg2rad(csv::to_double(f[1]))).second) {
        throw ParseError("duplicate order", number);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
  });
  std::vector<double> angles;
  for (const auto& [order, angle] : rows) angles.push_back(angle);
  return Codebook(geom, std::move(angles));
}

}  // namespace iasim

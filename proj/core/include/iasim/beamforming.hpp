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
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "iasim/channel.hpp"

namespace iasim {

// Reported SNR when no signal reaches the receiver.
inline constexpr double kNoSignalDb = -std::numeric_limits<double>::infinity();

// Unit-norm antenna weight vector.
class Beamformer {
 public:
  Beamformer() = default;
  // Normalizes `weights`; throws on a zero vector.
  explicit Beamformer(Eigen::VectorXcd weights);

  const Eigen::VectorXcd& weights() const { return weights_; }
  Eigen::Index size() const { return weights_.size(); }

 private:
  Eigen::VectorXcd weights_;
};

// Matched beam toward (az, el): a(az, el) / sqrt(N_a).
Beamformer beamformer_for_angle(const ArrayGeometry& geom, double az, double el = 0.0);

// Ordered azimuth beams; order is the sweep order.
class Codebook {
 public:
  Codebook() = default;
  Codebook(const ArrayGeometry& geom, std::vector<double> angles);

  std::size_t depth() const { return angles_.size(); }
  const std::vector<double>& angles() const { return angles_; }
  const Beamformer& beam(std::size_t i) const { return beams_.at(i); }

  // Beamformers as columns, N_a x depth.
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  // Same beams in the order given by `order` (a permutation of 0..depth-1).
  Codebook reordered(const std::vector<std::size_t>& order) const;

  // Index of the beam angularly closest to `az` (lowest index on ties).
  std::size_t nearest(double az) const;

 private:
  std::vector<double> angles_;
  std::vector<Beamformer> beams_;
  Eigen::MatrixXcd matrix_;
};

// Angles {0, 2pi/n, ..., (n-1) 2pi/n}.
std::vector<double> uniform_angles(std::size_t n_beams);
Codebook uniform_codebook(const ArrayGeometry& geom, std::size_t n_beams);

// ceil(2pi / theta_q), for 0 < theta_q <= 2pi.
std::size_t codebook_depth(double theta_q);

struct LinkBudget {
  double eirp_dbm = 43.0;
  double noise_dbm = -85.5;
  double bandwidth_mhz = 400.0;

  void validate() const;

  friend bool operator==(const LinkBudget&, const LinkBudget&) = default;
};

// |w^H H f|
double beam_gain(const Beamformer& w, const ChannelMatrix& h, const Beamformer& f);

// 10 log10(|w^H H f|^2 / N_a) + EIRP - noise, in dB.
double snr_db(const Beamformer& w, const ChannelMatrix& h, const Beamformer& f, const LinkBudget& budget);
// Same, from a precomputed gain.
double snr_from_gain(double gain, int n_elements, const LinkBudget& budget);

struct RxChoice {
  std::size_t index = 0;
  double gain = 0.0;
};

// argmax over rx_codebook of |w^H H f|; lowest index wins ties.
RxChoice best_rx_beam(const ChannelMatrix& h, const Beamformer& f, const Codebook& rx_codebook);

struct SvdOptimum {
  Beamformer f_opt;
  Beamformer w_opt;
  double sigma1 = 0.0;
};

// Leading singular triplet of H.
SvdOptimum svd_oracle(const ChannelMatrix& h);

double spectral_efficiency(double snr_db);

// CSV `order,angle_deg`.
void save_codebook(const std::filesystem::path& path, const Codebook& cb);
Codebook load_codebook(const std::filesystem::path& path, const ArrayGeometry& geom);

}  // namespace iasim

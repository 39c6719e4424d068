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

// Reference implementations used only by the tests. Each one is written from
// the defining formula, independently of the library code it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

inline double pathloss_db(double d_m, double f_ghz) { return 32.4 + 20.0 * std::log10(d_m) + 20.0 * std::log10(f_ghz); }

// Aligned single-path SNR: EIRP - PL - noise + 10 log10(N_a).
inline double aligned_snr_db(double eirp_dbm, double pl_db, double noise_dbm, int n_a) {
  return eirp_dbm - pl_db - noise_dbm + 10.0 * std::log10(static_cast<double>(n_a));
}

// Cylindrical array steering vector from 3D element positions:
// phase = k * <p_mn, u(az, el)>, ring-major stacking.
inline Eigen::VectorXcd steering(int n_rings, int n_per_ring, double lambda, double az, double el) {
  const double d = lambda / 2.0;
  const double r = d / (2.0 * std::sin(pi / n_per_ring));
  const double k = 2.0 * pi / lambda;
  const double u[3] = {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
  Eigen::VectorXcd a(n_rings * n_per_ring);
  for (int n = 1; n <= n_rings; ++n) {
    for (int m = 1; m <= n_per_ring; ++m) {
      const double phi = (2.0 * m - 1.0) * pi / n_per_ring;
      const double p[3] = {r * std::cos(phi), r * std::sin(phi), d * (n - 1)};
      const double proj = p[0] * u[0] + p[1] * u[1] + p[2] * u[2];
      a((n - 1) * n_per_ring + (m - 1)) = std::polar(1.0, k * proj);
    }
  }
  return a;
}

// Clockwise-from-north bearing as the argument of (north + j east).
inline double bearing(double fx, double fy, double tx, double ty) {
  double b = std::arg(cd(ty - fy, tx - fx));
  if (b < 0) b += 2.0 * pi;
  return b;
}

inline double wrap(double a) {
  a = std::fmod(a, 2.0 * pi);
  return a < 0 ? a + 2.0 * pi : a;
}

inline double circ_dist(double a, double b) {
  const double d = wrap(a - b);
  return std::min(d, 2.0 * pi - d);
}

// Minimal unfolded length tx -> q -> rx over q on the wall segment, found by
// dense search plus golden-section refinement (Fermat's principle).
inline double reflected_length_search(double tx, double ty, double rx, double ry, double ax, double ay, double bx,
                                      double by) {
  auto len = [&](double t) {
    const double qx = ax + t * (bx - ax), qy = ay + t * (by - ay);
    return std::hypot(qx - tx, qy - ty) + std::hypot(rx - qx, ry - qy);
  };
  const int n = 20000;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (len(static_cast<double>(i) / n) < len(static_cast<double>(best) / n)) best = i;
  }
  double lo = std::max(0.0, (best - 1.0) / n), hi = std::min(1.0, (best + 1.0) / n);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (len(m1) < len(m2)) hi = m2; else lo = m1;
  }
  return len((lo + hi) / 2.0);
}

// Do the open segment p-q and the closed segment a-b share a point? Decided
// by dense sampling of p-q against the side of a-b (sign change) and the
// projection onto a-b. Adequate for well-separated test geometry.
inline bool crosses_by_sampling(double px, double py, double qx, double qy, double ax, double ay, double bx, double by) {
  const int n = 100000;
  auto side = [&](double x, double y) { return (bx - ax) * (y - ay) - (by - ay) * (x - ax); };
  double prev = side(px + (qx - px) * 1e-9, py + (qy - py) * 1e-9);
  for (int i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double x = px + t * (qx - px), y = py + t * (qy - py);
    const double s = side(x, y);
    if ((s > 0) != (prev > 0) || s == 0.0) {
      const double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
      const double u = ((x - ax) * (bx - ax) + (y - ay) * (by - ay)) / len2;
      if (u >= -1e-4 && u <= 1.0 + 1e-4) return true;
    }
    prev = s;
  }
  return false;
}

// Tx beams visited by the left-right jump, given beam angles and the prior:
// rank beams by angle, start at the nearest, then +1, -1, +2, -2, ...
inline std::vector<std::size_t> jump_order(const std::vector<double>& angles, double prior) {
  const std::size_t n = angles.size();
  std::vector<std::size_t> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = i;
  std::stable_sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return angles[a] < angles[b]; });
  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = circ_dist(angles[i], prior);
    if (d < best) { best = d; start = i; }
  }
  long long pos = std::find(sorted.begin(), sorted.end(), start) - sorted.begin();
  std::vector<std::size_t> out;
  std::vector<bool> seen(n, false);
  for (long long k = 0; static_cast<std::size_t>(out.size()) < n; ++k) {
    for (long long s : {k, -k}) {
      const auto p = static_cast<std::size_t>(((pos + s) % static_cast<long long>(n) + static_cast<long long>(n)) %
                                              static_cast<long long>(n));
      if (!seen[p]) { seen[p] = true; out.push_back(sorted[p]); }
    }
  }
  return out;
}

inline double latency_ms(int trials) {
  // burst of 64 blocks at 0.125 ms, bursts every 160 ms
  const int burst = (trials - 1) / 64;
  const int slot = (trials - 1) % 64;
  return burst * 160.0 + (slot + 1) * 0.125;
}

// P(X <= x) by counting.
inline double ecdf_at(const std::vector<double>& s, double x) {
  return static_cast<double>(std::count_if(s.begin(), s.end(), [&](double v) { return v <= x; })) /
         static_cast<double>(s.size());
}

// |w^H H f| by explicit double sum.
inline double bilinear_gain(const Eigen::VectorXcd& w, const Eigen::MatrixXcd& h, const Eigen::VectorXcd& f) {
  cd acc = 0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) acc += std::conj(w(i)) * h(i, j) * f(j);
  }
  return std::abs(acc);
}

// Largest singular value by power iteration on H^H H.
inline double sigma1_power(const Eigen::MatrixXcd& h, int iters = 2000) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(h.cols());
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXcd nv = h.adjoint() * (h * v);
    const double n = nv.norm();
    if (n == 0) return 0;
    v = nv / n;
  }
  return (h * v).norm();
}

// 3x3 Prewitt gradient magnitude at (x, y) of a row-major image.
inline double prewitt_mag(const std::vector<std::uint8_t>& img, int w, int x, int y) {
  static const int kx[3][3] = {{-1, 0, 1}, {-1, 0, 1}, {-1, 0, 1}};
  static const int ky[3][3] = {{-1, -1, -1}, {0, 0, 0}, {1, 1, 1}};
  double gx = 0, gy = 0;
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i <= 1; ++i) {
      const double v = img[static_cast<std::size_t>(y + j) * w + (x + i)];
      gx += kx[j + 1][i + 1] * v;
      gy += ky[j + 1][i + 1] * v;
    }
  }
  return std::hypot(gx, gy);
}

// Circular quantization MSE of point masses at `centers` to the nearest angle.
inline double quant_mse(const std::vector<double>& centers, const std::vector<double>& masses,
                        const std::vector<double>& angles) {
  double acc = 0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (double a : angles) best = std::min(best, circ_dist(centers[i], a));
    acc += masses[i] * best * best;
  }
  return acc;
}

inline double shannon(double snr_db) { return std::log2(1.0 + std::pow(10.0, snr_db / 10.0)); }

}  // namespace oracle

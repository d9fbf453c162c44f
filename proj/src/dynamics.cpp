/*
 * Copyright 2026 The mirrorchain authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mirrorchain/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mirrorchain/parallel_detail.hpp"

namespace mirrorchain {

using complexd = std::complex<double>;

Propagator propagator(const EigenSystem& eig, double t) {
  const int n = eig.size();
  Eigen::VectorXcd phases(n);
  for (int nu = 0; nu < n; ++nu) {
    phases[nu] = std::polar(1.0, -eig.eigenvalues[nu] * t);
  }
  Propagator u;
  u.time = t;
  u.matrix = eig.eigenvectors.cast<complexd>() * phases.asDiagonal() *
             eig.eigenvectors.transpose().cast<complexd>();
  return u;
}

double mirror_phase(double phi0, int n_sites) {
  const double two_pi = 2.0 * std::numbers::pi;
  double phi = (n_sites - 1) * std::numbers::pi - phi0;
  phi = std::remainder(phi, two_pi);
  if (phi <= -std::numbers::pi) phi += two_pi;
  return phi;
}

std::complex<double> transfer_amplitude(const EigenSystem& eig, double t) {
  const int n = eig.size();
  complexd acc = 0.0;
  for (int nu = 0; nu < n; ++nu) {
    acc += eig.eigenvectors(n - 1, nu) * eig.eigenvectors(0, nu) *
           std::polar(1.0, -eig.eigenvalues[nu] * t);
  }
  return acc;
}

double transfer_fidelity(const EigenSystem& eig, double t) {
  return std::norm(transfer_amplitude(eig, t));
}

CorrelationSeries zz_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int j, int k,
                                 std::vector<double> times) {
  const int n = eig.size();
  if (j < 0 || j >= n || k < 0 || k >= n) {
    throw std::invalid_argument("site index out of range");
  }
  if (static_cast<int>(state.occupation.size()) != n) {
    throw std::invalid_argument("thermal state does not match the chain");
  }

  // Mode-resolved weights: G1(t) = sum_nu a_nu e^{+i eps t},
  // G2(t) = sum_nu b_nu e^{-i eps t}, and the connected value is
  // const + G1 G2.
  Eigen::VectorXd a(n), b(n);
  double f_jj = 0.0, f_kk = 0.0;
  for (int nu = 0; nu < n; ++nu) {
    const double vj = eig.eigenvectors(j, nu);
    const double vk = eig.eigenvectors(k, nu);
    const double f = state.occupation[nu];
    a[nu] = vj * vk * f;
    b[nu] = vj * vk * (1.0 - f);
    f_jj += vj * vj * f;
    f_kk += vk * vk * f;
  }
  const double constant = f_jj * f_kk - 0.5 * (f_jj + f_kk) + 0.25;

  CorrelationSeries series;
  series.observable = "zz";
  series.sites = {j, k};
  series.temperature = state.temperature();
  series.times = std::move(times);
  series.values.resize(series.times.size());

  detail::parallel_for_indices(
      static_cast<std::ptrdiff_t>(series.times.size()),
      [&](std::ptrdiff_t it) {
        const double t = series.times[it];
        complexd g1 = 0.0, g2 = 0.0;
        for (int nu = 0; nu < n; ++nu) {
          const complexd phase = std::polar(1.0, eig.eigenvalues[nu] * t);
          g1 += a[nu] * phase;
          g2 += b[nu] * std::conj(phase);
        }
        series.values[it] = constant + g1 * g2;
      });
  return series;
}

}  // namespace mirrorchain

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

#include "mirrorchain/thermal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mirrorchain {

namespace {
constexpr double kZeroEnergyTol = 1e-12;
}

double fermi_occupation(double eps, double beta) {
  if (beta < 0.0 || std::isnan(beta)) {
    throw std::invalid_argument("beta must be nonnegative");
  }
  if (std::isinf(beta)) {
    if (eps > kZeroEnergyTol) return 0.0;
    if (eps < -kZeroEnergyTol) return 1.0;
    return 0.5;
  }
  const double x = beta * eps;
  if (x > 700.0) return 0.0;
  if (x < -700.0) return 1.0;
  return 1.0 / (1.0 + std::exp(x));
}

double beta_from_temperature(double temperature) {
  if (temperature < 0.0 || std::isnan(temperature)) {
    throw std::invalid_argument("temperature must be nonnegative");
  }
  if (temperature == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(temperature)) return 0.0;
  return 1.0 / temperature;
}

double temperature_from_beta(double beta) {
  if (beta == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(beta)) return 0.0;
  return 1.0 / beta;
}

ThermalState ThermalState::make(const EigenSystem& eig, double beta) {
  ThermalState state;
  state.beta = beta;
  // Zero-crossing tolerance scales with the spectrum.
  const double scale =
      std::max(std::abs(eig.eigenvalues[0]),
               std::abs(eig.eigenvalues[eig.size() - 1]));
  state.occupation.resize(eig.size());
  for (int nu = 0; nu < eig.size(); ++nu) {
    double eps = eig.eigenvalues[nu];
    if (std::abs(eps) < kZeroEnergyTol * std::max(1.0, scale)) eps = 0.0;
    state.occupation[nu] = fermi_occupation(eps, beta);
  }
  return state;
}

ThermalState ThermalState::from_temperature(const EigenSystem& eig,
                                            double temperature) {
  return make(eig, beta_from_temperature(temperature));
}

}  // namespace mirrorchain

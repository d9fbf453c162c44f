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

#pragma once

#include <vector>

#include "mirrorchain/eigensystem.hpp"

namespace mirrorchain {

// Fermi factor 1/(1 + e^{beta eps}).  beta = +inf is the T = 0 step (1/2 at
// eps = 0, the limit of the canonical trace over the degenerate ground
// manifold); beta = 0 is the T = inf state with f = 1/2 everywhere.
double fermi_occupation(double eps, double beta);

// beta = 1/T with the conventions above; T = 0 maps to beta = +inf.
double beta_from_temperature(double temperature);
double temperature_from_beta(double beta);

/**
 * @brief Grand-canonical free-fermion equilibrium state at mu = 0.
 */
struct ThermalState {
  double beta = 0.0;
  std::vector<double> occupation;  // f(eps_nu), aligned with the EigenSystem

  static ThermalState make(const EigenSystem& eig, double beta);
  static ThermalState from_temperature(const EigenSystem& eig, double temperature);

  double temperature() const { return temperature_from_beta(beta); }
};

}  // namespace mirrorchain

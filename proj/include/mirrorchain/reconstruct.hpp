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

#include <cstdint>
#include <span>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "mirrorchain/chain.hpp"
#include "mirrorchain/spectrum.hpp"

namespace mirrorchain {

enum class ReconstructionMethod { direct, annealing };

struct ReconstructionReport {
  SymmetricChainSpec chain;
  double spectral_residual = 0.0;  // max |eps_target - eps_achieved|
  ReconstructionMethod method = ReconstructionMethod::direct;
  int iterations = 0;
  bool converged = false;
};

/**
 * @brief Spectral weights of the persymmetric Jacobi matrix with the given
 * eigenvalues: the squared first eigenvector components.
 *
 * For a mirror-symmetric chain the weights are fixed by the eigenvalues
 * alone, q_nu^2 = C / prod_{mu != nu} |eps_nu - eps_mu| with C chosen so the
 * weights sum to one.  Evaluated in the log domain so large spectra do not
 * overflow the products.
 */
Eigen::VectorXd persymmetric_weights(std::span<const double> energies);

/**
 * @brief Recovers the unique mirror-symmetric chain with the prescribed
 * spectrum.
 *
 * Runs the Lanczos recurrence on diag(energies) seeded with the square roots
 * of the persymmetric weights, with full re-orthogonalization at every step.
 * The generated tridiagonal entries are symmetrized (pre-averaging asymmetry
 * above 1e-6 relative raises std::runtime_error) and verified by forward
 * diagonalization.  Near-degenerate targets (gap < 1e-10 * spread) are
 * rejected since the weights blow up.
 */
ReconstructionReport reconstruct_direct(const SpectrumSpec& spectrum,
                                        double tol = 1e-8);

struct AnnealSchedule {
  double t0 = 0.0;        // initial temperature; <= 0 selects spread^2
  double cooling = 0.995; // geometric factor per sweep
  int sweeps = 6000;
  std::uint64_t seed = 0;
};

AnnealSchedule schedule_from_json(const nlohmann::json& j);
nlohmann::json schedule_to_json(const AnnealSchedule& s);

/**
 * @brief Simulated-annealing fallback for the same inverse problem.
 *
 * Minimizes the summed squared eigenvalue error over mirror-symmetric
 * (J, h) with J > 0, starting from a homogeneous chain scaled to the target
 * spectral spread.  One symmetric coupling or field pair is perturbed per
 * proposal with a Gaussian step whose width shrinks with the temperature;
 * a zero-temperature polishing phase with geometrically shrinking steps
 * follows the cooling schedule.  Deterministic for a fixed seed.  A residual
 * above `tol` after the budget marks the report non-converged rather than
 * throwing.
 */
ReconstructionReport reconstruct_annealing(const SpectrumSpec& spectrum,
                                           std::uint64_t seed,
                                           const AnnealSchedule& schedule = {},
                                           double tol = 1e-6);

struct CouplingVariation {
  double min_coupling = 0.0;
  double max_coupling = 0.0;
  double relative = 0.0;  // (max-min)/(max+min), the "+-" convention
};

CouplingVariation coupling_variation(const SymmetricChainSpec& chain);

nlohmann::json report_to_json(const ReconstructionReport& report);

}  // namespace mirrorchain

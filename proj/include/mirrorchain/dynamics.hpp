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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mirrorchain/eigensystem.hpp"
#include "mirrorchain/series.hpp"
#include "mirrorchain/thermal.hpp"

namespace mirrorchain {

/**
 * @brief Single-particle propagator U(t)_{ij} = <i| e^{-i H1 t} |j>.
 *
 * Unitary; U(0) = 1.  For a chain certified with (tau, phi0),
 * U(tau) = e^{i phi_m} R with R the site-reversal permutation and
 * phi_m = N pi - phi0 (mod 2 pi), so U(2 tau) = e^{2 i phi_m} 1.
 */
struct Propagator {
  double time = 0.0;
  Eigen::MatrixXcd matrix;
};

Propagator propagator(const EigenSystem& eig, double t);

// Mirror phase phi_m realized at t = tau by a chain whose certificate
// carries phi0: the parity ladder of an (N+1)-site chain starts from an even
// top eigenvector, which shifts the paper-style bookkeeping by N pi.
double mirror_phase(double phi0, int n_sites);

// End-to-end transfer amplitude U(t)_{N,0} and probability |amplitude|^2.
std::complex<double> transfer_amplitude(const EigenSystem& eig, double t);
double transfer_fidelity(const EigenSystem& eig, double t);

/**
 * @brief <S_j^z(t) S_k^z(0)> at the given thermal state, on an explicit
 * time grid.
 *
 * Evaluated through the fermion two-point functions by Wick's theorem:
 *   <n_j(t) n_k> = <n_j><n_k> + <c_j^+(t) c_k><c_j(t) c_k^+>,
 * with <c_j^+(t) c_k> = [e^{+i H1 t} F]_{jk},
 * <c_j(t) c_k^+> = [e^{-i H1 t} (1 - F)]_{jk}, F = V diag(f) V^T.
 * Time points are independent and evaluated in parallel.
 */
CorrelationSeries zz_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int j, int k,
                                 std::vector<double> times);

}  // namespace mirrorchain

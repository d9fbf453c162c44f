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

#include <Eigen/Dense>

#include "mirrorchain/chain.hpp"
#include "mirrorchain/series.hpp"

namespace mirrorchain {

/**
 * @brief Brute-force spin-space model on the full 2^(N+1)-dimensional
 * product basis.
 *
 * The independent truth source for the fermionic machinery: built and
 * evaluated entirely with spin operators, no Jordan-Wigner anywhere.
 * Basis convention: site 0 is the least significant bit, spin-up means the
 * bit is set.
 */
struct DenseSpinModel {
  int n_sites = 0;
  Eigen::MatrixXd hamiltonian;

  // Eigendecomposition cache, filled on first use.
  mutable Eigen::VectorXd energies;
  mutable Eigen::MatrixXd states;
  mutable bool solved = false;

  int dimension() const { return 1 << n_sites; }
  void ensure_solved() const;
};

// Dense Hamiltonian of the chain, including the h_i (S_i^z + 1/2) term.
// n_sites > 12 is rejected (memory guard).
DenseSpinModel build_spin_hamiltonian(const SymmetricChainSpec& spec);

enum class SpinAxis { x, z };

struct SpinOpSpec {
  SpinAxis axis = SpinAxis::z;
  int site = 0;
};

Eigen::MatrixXd dense_spin_operator(int n_sites, const SpinOpSpec& op);

/**
 * @brief <A(t) B(0)> by literal spectral decomposition,
 * Z^{-1} sum_{n,m} e^{-beta E_n} e^{i (E_n - E_m) t} A_{nm} B_{mn}.
 *
 * beta = +inf takes an equal-weight mixture over the ground manifold
 * (degeneracy detected at 1e-9 of the spectral spread).
 */
CorrelationSeries ed_correlation(const DenseSpinModel& model,
                                 const SpinOpSpec& op_a,
                                 const SpinOpSpec& op_b, double beta,
                                 std::vector<double> times);

// All 2^n subset sums of the single-particle energies, ascending: the
// many-body spectrum a free-fermion chain must have.
std::vector<double> subset_sum_spectrum(const Eigen::VectorXd& single_particle);

}  // namespace mirrorchain

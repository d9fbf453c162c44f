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

namespace mirrorchain {

/**
 * @brief Eigenvalues and eigenvectors of the single-particle matrix H1.
 *
 * Eigenvalues are strictly ascending (they are nondegenerate for positive
 * couplings).  Column nu of `eigenvectors` belongs to eigenvalues[nu]; the
 * sign of each column is fixed so its first non-negligible component is
 * positive.
 */
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/**
 * @brief Diagonalizes a symmetric tridiagonal matrix by implicit-shift QL
 * with eigenvector accumulation.  The matrix is never densified.
 *
 * Throws std::runtime_error with the iteration count if a sweep fails to
 * converge (does not happen for well-conditioned chains of <= 1e3 sites).
 */
EigenSystem diagonalize(const TridiagonalMatrix& matrix);

// Eigenvalues only (ascending); cheaper inner loop for fitting.
Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag,
                                        const Eigen::VectorXd& off);

struct SignChangeReport {
  std::vector<int> counts;   // sign changes per eigenvector column
  std::vector<int> skipped;  // near-zero components bridged per column
};

// Counts sign changes down each eigenvector column.  Components with
// |x_i| < 1e-12 * max|x| are treated as exact zeros and bridged over (the
// count then looks at the nearest non-negligible neighbors); the number of
// bridged components is reported per column.
SignChangeReport check_sign_changes(const EigenSystem& eig);

// For a Jacobi matrix with positive off-diagonal entries the eigenvector of
// the largest eigenvalue is nodeless (Perron-Frobenius), and each step down
// the spectrum adds one sign change.  Column nu in ascending order therefore
// crosses zero n-1-nu times.
int expected_sign_changes(int nu, int n);

// Parity signature of column nu of a mirror-symmetric chain, +1 even / -1
// odd: the top eigenvector is even and parity alternates downward.
int parity_signature(int nu, int n);

// Max over nu, i of |x_i - sigma_nu x_{N-i}| with sigma_nu the expected
// parity signature.  Zero (to rounding) for mirror-symmetric chains.
double check_parity(const EigenSystem& eig);

}  // namespace mirrorchain

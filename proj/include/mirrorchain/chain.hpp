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

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace mirrorchain {

/**
 * @brief Mirror-symmetric XX chain with N+1 sites.
 *
 * Couplings J_1..J_N (strictly positive) and on-site fields h_0..h_N,
 * with h_i = h_{N-i} and J_i = J_{N+1-i}.  Units are hbar = k_B = 1.
 */
struct SymmetricChainSpec {
  int n_sites = 0;                // N+1
  std::vector<double> couplings;  // J_1..J_N
  std::vector<double> fields;     // h_0..h_N

  int bonds() const { return n_sites - 1; }
};

// Validates structure: sizes, strict coupling positivity (the index of the
// first offending J_i is reported) and mirror symmetry to 1e-12 relative.
// Throws std::invalid_argument on violation.  Returns non-fatal warnings,
// e.g. couplings below 1e-8 of the largest one.
std::vector<std::string> validate(const SymmetricChainSpec& spec);

SymmetricChainSpec chain_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const SymmetricChainSpec& spec);
SymmetricChainSpec load_chain(const std::string& path);
void save_chain(const SymmetricChainSpec& spec, const std::string& path);

// FNV-1a hash of the canonical serialization; used to tag data files.
std::string chain_hash(const SymmetricChainSpec& spec);

// Single-particle Hamiltonian H1: symmetric tridiagonal, diagonal h_0..h_N,
// sub/super-diagonal J_1..J_N.
struct TridiagonalMatrix {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;

  int size() const { return static_cast<int>(diag.size()); }
  Eigen::MatrixXd dense() const;
};

TridiagonalMatrix build_single_particle_matrix(const SymmetricChainSpec& spec);

}  // namespace mirrorchain

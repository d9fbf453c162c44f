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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "mirrorchain/chain.hpp"
#include "mirrorchain/eigensystem.hpp"
#include "test_helpers.hpp"

using namespace mirrorchain;

TEST_SUITE("jacobi_core") {

TEST_CASE("single-particle matrix of the 2-site chain") {
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const TridiagonalMatrix m = build_single_particle_matrix(chain);
  const Eigen::MatrixXd dense = m.dense();
  Eigen::MatrixXd want(2, 2);
  want << 0, 1, 1, 0;
  CHECK((dense - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-particle matrix of the 3-site homogeneous chain") {
  SymmetricChainSpec chain{3, {1.0, 1.0}, {0.0, 0.0, 0.0}};
  const TridiagonalMatrix m = build_single_particle_matrix(chain);
  CHECK(m.size() == 3);
  CHECK(m.diag.cwiseAbs().maxCoeff() == 0.0);
  CHECK(m.off[0] == 1.0);
  CHECK(m.off[1] == 1.0);
}

TEST_CASE("nonpositive couplings are rejected with the offending index") {
  SymmetricChainSpec chain{3, {-1.0, -1.0}, {0.0, 0.0, 0.0}};
  bool thrown = false;
  try {
    build_single_particle_matrix(chain);
  } catch (const std::invalid_argument& e) {
    thrown = true;
    CHECK(std::string(e.what()).find("J_1") != std::string::npos);
  }
  CHECK(thrown);
}

TEST_CASE("mirror-symmetry violations are rejected") {
  SymmetricChainSpec bad_fields{3, {1.0, 1.0}, {0.5, 0.0, -0.5}};
  CHECK_THROWS_AS(validate(bad_fields), std::invalid_argument);
  SymmetricChainSpec bad_couplings{4, {1.0, 2.0, 1.5}, {0.0, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(validate(bad_couplings), std::invalid_argument);
}

TEST_CASE("couplings far below the largest one draw a warning") {
  SymmetricChainSpec chain{3, {1e-10, 1e-10}, {0.0, 0.0, 0.0}};
  CHECK(validate(chain).empty());
  chain.n_sites = 4;
  chain.couplings = {1e-10, 1.0, 1e-10};
  chain.fields = {0.0, 0.0, 0.0, 0.0};
  const auto warnings = validate(chain);
  REQUIRE(warnings.size() == 2);
  CHECK(warnings[0].find("J_1") != std::string::npos);
}

TEST_CASE("2x2 diagonalization is the analytic one") {
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(eig.eigenvectors(0, 0) - s) < 1e-14);
  CHECK(std::abs(eig.eigenvectors(1, 0) + s) < 1e-14);
  CHECK(std::abs(eig.eigenvectors(0, 1) - s) < 1e-14);
  CHECK(std::abs(eig.eigenvectors(1, 1) - s) < 1e-14);
}

TEST_CASE("3-site zero-field chain has spectrum -sqrt2, 0, sqrt2") {
  // characteristic polynomial lambda^3 - 2 lambda = 0
  SymmetricChainSpec chain{3, {1.0, 1.0}, {0.0, 0.0, 0.0}};
  const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
  CHECK(std::abs(eig.eigenvalues[0] + std::numbers::sqrt2) < 1e-14);
  CHECK(std::abs(eig.eigenvalues[1]) < 1e-14);
  CHECK(std::abs(eig.eigenvalues[2] - std::numbers::sqrt2) < 1e-14);
}

TEST_CASE("homogeneous chain reproduces the cosine dispersion") {
  const int n = 12;
  const double j = 0.75;
  SymmetricChainSpec chain;
  chain.n_sites = n;
  chain.couplings.assign(n - 1, j);
  chain.fields.assign(n, 0.0);
  const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
  for (int nu = 0; nu < n; ++nu) {
    const double want = -2.0 * j * std::cos(std::numbers::pi * (nu + 1) / (n + 1));
    CHECK(std::abs(eig.eigenvalues[nu] - want) < 1e-12);
  }
}

TEST_CASE("sign-change counts walk down from the top of the spectrum") {
  SymmetricChainSpec c2{2, {1.0}, {0.0, 0.0}};
  const auto r2 = check_sign_changes(diagonalize(build_single_particle_matrix(c2)));
  CHECK(r2.counts == std::vector<int>{1, 0});

  SymmetricChainSpec c3{3, {1.0, 1.0}, {0.0, 0.0, 0.0}};
  const auto r3 = check_sign_changes(diagonalize(build_single_particle_matrix(c3)));
  CHECK(r3.counts == std::vector<int>{2, 1, 0});
  // the zero mode's eigenvector (1, 0, -1)/sqrt2 has its middle component
  // bridged over
  CHECK(r3.skipped == std::vector<int>{0, 1, 0});
  for (int nu = 0; nu < 3; ++nu) {
    CHECK(r3.counts[nu] == expected_sign_changes(nu, 3));
  }
}

TEST_CASE("parity residual vanishes for the analytic cases") {
  SymmetricChainSpec c2{2, {1.0}, {0.0, 0.0}};
  CHECK(check_parity(diagonalize(build_single_particle_matrix(c2))) < 1e-15);
  SymmetricChainSpec c3{3, {1.0, 1.0}, {0.0, 0.0, 0.0}};
  CHECK(check_parity(diagonalize(build_single_particle_matrix(c3))) < 1e-15);
}

TEST_CASE("structure theorems hold on random mirror chains") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 63;
    const auto chain = testutil::random_mirror_chain(n, 900 + trial);
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));

    for (int nu = 0; nu + 1 < n; ++nu) {
      CHECK(eig.eigenvalues[nu] < eig.eigenvalues[nu + 1]);
    }
    const auto report = check_sign_changes(eig);
    for (int nu = 0; nu < n; ++nu) {
      CHECK(report.counts[nu] == expected_sign_changes(nu, n));
    }
    CHECK(check_parity(eig) < 1e-10);

    // orthonormality and reassembly
    const Eigen::MatrixXd gram =
        eig.eigenvectors.transpose() * eig.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <
          1e-10);
    const TridiagonalMatrix h1 = build_single_particle_matrix(chain);
    const Eigen::MatrixXd back = eig.eigenvectors *
                                 eig.eigenvalues.asDiagonal() *
                                 eig.eigenvectors.transpose();
    const double scale = h1.dense().cwiseAbs().maxCoeff();
    CHECK((back - h1.dense()).cwiseAbs().maxCoeff() < 1e-10 * scale);
  }
}

TEST_CASE("zero-field chains have spectra symmetric about zero") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + 5 * trial;
    const auto chain = testutil::random_mirror_chain(n, 7000 + trial, true);
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
    for (int nu = 0; nu < n; ++nu) {
      CHECK(std::abs(eig.eigenvalues[nu] + eig.eigenvalues[n - 1 - nu]) <
            1e-10);
    }
  }
}

TEST_CASE("eigenvalue-only path agrees with the full diagonalization") {
  const auto chain = testutil::random_mirror_chain(17, 512);
  const TridiagonalMatrix h1 = build_single_particle_matrix(chain);
  const EigenSystem eig = diagonalize(h1);
  const Eigen::VectorXd vals = tridiagonal_eigenvalues(h1.diag, h1.off);
  CHECK((vals - eig.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
}

}  // TEST_SUITE

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

#include "mirrorchain/dynamics.hpp"
#include "mirrorchain/ed_oracle.hpp"
#include "mirrorchain/eigensystem.hpp"
#include "mirrorchain/reconstruct.hpp"
#include "mirrorchain/spectrum.hpp"
#include "test_helpers.hpp"

using namespace mirrorchain;

TEST_SUITE("ed_oracle") {

TEST_CASE("2-site Hamiltonian in the product basis") {
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  REQUIRE(model.dimension() == 4);
  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(4, 4);
  want(1, 2) = want(2, 1) = 1.0;  // |up down> <-> |down up>
  CHECK((model.hamiltonian - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fields enter as h_i n_i") {
  SymmetricChainSpec chain{2, {1.0}, {0.3, 0.3}};
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  CHECK(model.hamiltonian(0, 0) == 0.0);
  CHECK(model.hamiltonian(1, 1) == doctest::Approx(0.3));
  CHECK(model.hamiltonian(3, 3) == doctest::Approx(0.6));
}

TEST_CASE("the Hamiltonian is symmetric and conserves magnetization") {
  const auto chain = testutil::random_mirror_chain(6, 55);
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  CHECK((model.hamiltonian - model.hamiltonian.transpose())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  for (int s = 0; s < model.dimension(); ++s) {
    for (int t = 0; t < model.dimension(); ++t) {
      if (model.hamiltonian(s, t) != 0.0) {
        CHECK(__builtin_popcount(s) == __builtin_popcount(t));
      }
    }
  }
}

TEST_CASE("many-body spectrum equals the subset sums of the levels") {
  for (int n : {2, 3, 4, 5, 6}) {
    const auto chain = testutil::random_mirror_chain(n, 777 + n);
    const DenseSpinModel model = build_spin_hamiltonian(chain);
    model.ensure_solved();
    const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
    const std::vector<double> sums = subset_sum_spectrum(eig.eigenvalues);
    REQUIRE(static_cast<int>(sums.size()) == model.dimension());
    const double scale =
        std::max(1.0, std::abs(model.energies[model.dimension() - 1]));
    for (int i = 0; i < model.dimension(); ++i) {
      CHECK(std::abs(sums[i] - model.energies[i]) < 1e-8 * scale);
    }
  }
}

TEST_CASE("single-flip sector spectrum is eps_nu plus the empty-chain energy") {
  const auto chain = testutil::random_mirror_chain(5, 31);
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  model.ensure_solved();
  const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
  // collect ED eigenvalues whose eigenvector lives in the one-up-spin sector
  std::vector<double> sector;
  for (int i = 0; i < model.dimension(); ++i) {
    double weight = 0.0;
    for (int s = 0; s < model.dimension(); ++s) {
      if (__builtin_popcount(s) == 1) {
        weight += model.states(s, i) * model.states(s, i);
      }
    }
    if (weight > 0.999999) sector.push_back(model.energies[i]);
  }
  REQUIRE(sector.size() == 5);
  std::sort(sector.begin(), sector.end());
  for (int nu = 0; nu < 5; ++nu) {
    CHECK(sector[nu] == doctest::Approx(eig.eigenvalues[nu]).epsilon(1e-10));
  }
}

TEST_CASE("equal-time equal-site zz expectation is 1/4 at any temperature") {
  const auto chain = testutil::random_mirror_chain(4, 12);
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  for (double beta : {0.0, 0.7, std::numeric_limits<double>::infinity()}) {
    const auto series = ed_correlation(model, {SpinAxis::z, 0},
                                       {SpinAxis::z, 0}, beta, {0.0});
    CHECK(series.values[0].real() == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("mirror transfer shows up in the dense picture too") {
  // 4-site chain with the half-integer ladder spectrum, tau = pi
  const SpectrumSpec spec = linear_spectrum(4, -1.5, 1.0);
  const auto chain = reconstruct_direct(spec).chain;
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  const auto series = ed_correlation(model, {SpinAxis::z, 3}, {SpinAxis::z, 0},
                                     beta_from_temperature(0.0),
                                     {spec.tau});
  CHECK(series.values[0].real() == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("x and z correlators match the fermionic path on a 6-site chain") {
  const auto chain = testutil::random_mirror_chain(6, 2718);
  const EigenSystem eig = diagonalize(build_single_particle_matrix(chain));
  const DenseSpinModel model = build_spin_hamiltonian(chain);
  const std::vector<double> times{0.0, 0.6, 1.8};
  const double beta = 1.0;
  const ThermalState state = ThermalState::make(eig, beta);
  {
    const auto fermionic = zz_correlation(eig, state, 4, 1, times);
    const auto dense = ed_correlation(model, {SpinAxis::z, 4}, {SpinAxis::z, 1},
                                      beta, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      CHECK(std::abs(fermionic.values[i] - dense.values[i]) < 1e-8);
    }
  }
}

TEST_CASE("size guard rejects chains beyond 12 sites") {
  SymmetricChainSpec chain;
  chain.n_sites = 13;
  chain.couplings.assign(12, 1.0);
  chain.fields.assign(13, 0.0);
  CHECK_THROWS_AS(build_spin_hamiltonian(chain), std::invalid_argument);
}

TEST_CASE("operator builder validates sites") {
  CHECK_THROWS_AS(dense_spin_operator(3, {SpinAxis::x, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dense_spin_operator(3, {SpinAxis::z, -1}),
                  std::invalid_argument);
}

}  // TEST_SUITE

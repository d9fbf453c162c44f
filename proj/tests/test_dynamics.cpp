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
#include "mirrorchain/eigensystem.hpp"
#include "mirrorchain/reconstruct.hpp"
#include "mirrorchain/spectrum.hpp"
#include "mirrorchain/thermal.hpp"
#include "test_helpers.hpp"

using namespace mirrorchain;

namespace {
constexpr double kPi = std::numbers::pi;

EigenSystem eigensystem_of(const SymmetricChainSpec& chain) {
  return diagonalize(build_single_particle_matrix(chain));
}

// Largest deviation of U(tau) from e^{i phi} R.
double mirror_deviation(const Eigen::MatrixXcd& u, double phi) {
  const int n = static_cast<int>(u.rows());
  const std::complex<double> phase = std::polar(1.0, phi);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::complex<double> want =
          (i + j == n - 1) ? phase : std::complex<double>(0.0, 0.0);
      worst = std::max(worst, std::abs(u(i, j) - want));
    }
  }
  return worst;
}
}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("propagator at t = 0 is the identity and stays unitary") {
  const auto chain = testutil::random_mirror_chain(9, 42);
  const EigenSystem eig = eigensystem_of(chain);
  const Propagator u0 = propagator(eig, 0.0);
  CHECK((u0.matrix - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() <
        1e-12);
  for (double t : {0.37, 2.9, 17.0}) {
    const Propagator u = propagator(eig, t);
    const Eigen::MatrixXcd gram = u.matrix * u.matrix.adjoint();
    CHECK((gram - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("2-site chain transfers completely at t = pi/(2J)") {
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const EigenSystem eig = eigensystem_of(chain);
  const Propagator u = propagator(eig, kPi / 2.0);
  CHECK(std::abs(std::abs(u.matrix(1, 0)) - 1.0) < 1e-12);
  CHECK(transfer_fidelity(eig, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("transfer fidelity vanishes at t = 0") {
  for (int n : {2, 5, 12}) {
    const auto chain = testutil::random_mirror_chain(n, 600 + n);
    CHECK(transfer_fidelity(eigensystem_of(chain), 0.0) == 0.0);
  }
}

TEST_CASE("certified chains mirror at tau and revive at 2 tau") {
  const std::vector<SpectrumSpec> designs = {
      linear_spectrum(6, -2.5, 1.0),
      quadratic_spectrum(4, 0.0, 1.0, 1, 1),
      cosine_distorted_spectrum(9, 18.0),
      cosine_distorted_spectrum(10, 22.0),
  };
  for (const SpectrumSpec& spec : designs) {
    const MirrorCertificate cert = certify_spectrum(spec);
    REQUIRE(cert.valid);
    const auto chain = reconstruct_direct(spec).chain;
    const EigenSystem eig = eigensystem_of(chain);
    const double phi_m = mirror_phase(cert.phi0, chain.n_sites);

    const Propagator u_tau = propagator(eig, spec.tau);
    CHECK(mirror_deviation(u_tau.matrix, phi_m) < 1e-8);
    for (int i = 0; i < chain.n_sites; ++i) {
      CHECK(std::abs(std::abs(u_tau.matrix(chain.n_sites - 1 - i, i)) - 1.0) <
            1e-9);
    }
    CHECK(transfer_fidelity(eig, spec.tau) == doctest::Approx(1.0).epsilon(1e-9));

    const Propagator u_2tau = propagator(eig, 2.0 * spec.tau);
    const Eigen::MatrixXcd want =
        std::polar(1.0, 2.0 * phi_m) *
        Eigen::MatrixXcd::Identity(chain.n_sites, chain.n_sites);
    CHECK((u_2tau.matrix - want).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("thermal occupations respect the Fermi function limits") {
  CHECK(fermi_occupation(1.0, 0.0) == 0.5);
  CHECK(fermi_occupation(-3.0, 0.0) == 0.5);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(fermi_occupation(0.5, inf) == 0.0);
  CHECK(fermi_occupation(-0.5, inf) == 1.0);
  CHECK(fermi_occupation(0.0, inf) == 0.5);
  CHECK(beta_from_temperature(0.0) == inf);
  CHECK(beta_from_temperature(inf) == 0.0);
  CHECK(temperature_from_beta(0.0) == inf);

  const auto chain = testutil::random_mirror_chain(11, 4);
  const EigenSystem eig = eigensystem_of(chain);
  const ThermalState state = ThermalState::make(eig, 1.3);
  for (int nu = 0; nu < 11; ++nu) {
    CHECK(state.occupation[nu] >= 0.0);
    CHECK(state.occupation[nu] <= 1.0);
    if (nu > 0) CHECK(state.occupation[nu] <= state.occupation[nu - 1]);
  }
  CHECK_THROWS_AS(fermi_occupation(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_from_temperature(-1.0), std::invalid_argument);
}

TEST_CASE("equal-site zz at t = 0 is the spin length 1/4 at any temperature") {
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const EigenSystem eig = eigensystem_of(chain);
  for (double t_kelvin : {0.0, 0.7, 1000.0,
                          std::numeric_limits<double>::infinity()}) {
    const ThermalState state = ThermalState::from_temperature(eig, t_kelvin);
    const auto series = zz_correlation(eig, state, 0, 0, {0.0});
    CHECK(series.values[0].real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(series.values[0].imag()) < 1e-14);
  }
}

TEST_CASE("end-to-end zz peaks at exactly 1/4 at the mirror time") {
  // 7-level integer mirror band; small enough to stay fast
  const SpectrumSpec spec = cosine_distorted_spectrum(7, 11.0);
  const auto chain = reconstruct_direct(spec).chain;
  const EigenSystem eig = eigensystem_of(chain);
  for (double t_kelvin : {0.0, 1000.0}) {
    const ThermalState state = ThermalState::from_temperature(eig, t_kelvin);
    const auto series = zz_correlation(eig, state, 6, 0, {0.0, kPi});
    CHECK(std::abs(series.values[0]) < 1e-12);  // uncorrelated ends at t = 0
    CHECK(series.values[1].real() == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("zz series is symmetric about the mirror time for end sites") {
  const SpectrumSpec spec = cosine_distorted_spectrum(9, 18.0);
  const auto chain = reconstruct_direct(spec).chain;
  const EigenSystem eig = eigensystem_of(chain);
  const ThermalState state = ThermalState::from_temperature(eig, 0.0);
  std::vector<double> times;
  for (int i = -8; i <= 8; ++i) times.push_back(kPi + 0.11 * i);
  const auto series = zz_correlation(eig, state, 0, 8, times);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(series.values[i].real() -
                   series.values[16 - i].real()) < 1e-8);
  }
}

TEST_CASE("two-time ordering flips under complex conjugation") {
  const auto chain = testutil::random_mirror_chain(8, 77);
  const EigenSystem eig = eigensystem_of(chain);
  const ThermalState state = ThermalState::make(eig, 0.9);
  const std::vector<double> times{-1.3, -0.4, 0.0, 0.4, 1.3};
  const auto series = zz_correlation(eig, state, 5, 2, times);
  for (int i = 0; i < 2; ++i) {
    const auto forward = series.values[4 - i];
    const auto backward = series.values[i];
    CHECK(std::abs(forward - std::conj(backward)) < 1e-12);
  }
}

TEST_CASE("site indices are validated") {
  const auto chain = testutil::random_mirror_chain(4, 3);
  const EigenSystem eig = eigensystem_of(chain);
  const ThermalState state = ThermalState::make(eig, 1.0);
  CHECK_THROWS_AS(zz_correlation(eig, state, 0, 4, {0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(zz_correlation(eig, state, -1, 0, {0.0}),
                  std::invalid_argument);
}

TEST_CASE("periodicity check on a constant series and a bad grid") {
  CorrelationSeries constant;
  constant.times = {0.0, 1.0, 2.0, 3.0};
  constant.values = {{0.3, 0.0}, {0.3, 0.0}, {0.3, 0.0}, {0.3, 0.0}};
  CHECK(periodicity_check(constant, 1.0) == 0.0);
  CHECK(periodicity_check(constant, 2.0) == 0.0);
  CHECK_THROWS_AS(periodicity_check(constant, 0.37), std::invalid_argument);
}

TEST_CASE("zz series on a mirror chain is 2 tau periodic") {
  const SpectrumSpec spec = cosine_distorted_spectrum(8, 16.0);
  const auto chain = reconstruct_direct(spec).chain;
  const EigenSystem eig = eigensystem_of(chain);
  const ThermalState state = ThermalState::from_temperature(eig, 0.5);
  std::vector<double> times;
  for (int i = 0; i <= 96; ++i) times.push_back(i * spec.tau / 16.0);
  const auto series = zz_correlation(eig, state, 0, 7, times);
  CHECK(periodicity_check(series, 2.0 * spec.tau) < 1e-8);
}

TEST_CASE("mirror phase bookkeeping ties the certificate to the propagator") {
  // phi_m = N pi - phi0 (mod 2 pi); the 2-site J = 1 chain has tau = pi/2,
  // phi0 = -pi/2 and U(tau) = -i R.
  const SpectrumSpec spec = linear_spectrum(2, -1.0, 2.0);
  const MirrorCertificate cert = certify_spectrum(spec);
  REQUIRE(cert.valid);
  CHECK(cert.phi0 == doctest::Approx(-kPi / 2.0));
  const double phi_m = mirror_phase(cert.phi0, 2);
  CHECK(phi_m == doctest::Approx(-kPi / 2.0));
  SymmetricChainSpec chain{2, {1.0}, {0.0, 0.0}};
  const Propagator u = propagator(eigensystem_of(chain), spec.tau);
  CHECK(mirror_deviation(u.matrix, phi_m) < 1e-12);
}

}  // TEST_SUITE

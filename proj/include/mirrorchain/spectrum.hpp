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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mirrorchain {

inline constexpr double kDefaultCertTol = 1e-9;

/**
 * @brief Single-particle spectrum that mirrors at time tau.
 *
 * A chain acts as a perfect mirror at time tau when
 *     eps_nu * tau = (2 n(nu) + nu) * pi + phi0
 * for every level, with n(nu) an arbitrary integer function and phi0 a
 * global phase.  Equivalently every consecutive gap times tau/pi is an odd
 * integer.
 */
struct SpectrumSpec {
  std::vector<double> energies;  // strictly ascending
  double tau = 0.0;
  double phi0 = 0.0;
  std::vector<long long> n_assign;

  int levels() const { return static_cast<int>(energies.size()); }
};

struct MirrorCertificate {
  bool valid = false;
  double tau = 0.0;
  double phi0 = 0.0;  // eps_0 * tau reduced to (-pi, pi]
  std::vector<long long> n_assign;
  std::vector<double> residuals;  // distance of (eps tau - phi0)/pi - nu from 2Z
  double worst_residual = 0.0;
};

/**
 * @brief Checks the mirror condition for an ascending spectrum at time tau.
 *
 * phi0 is fixed from the lowest level (reduced to (-pi, pi]); the integer
 * assignments n(nu) and per-level residuals are reported.  Throws
 * std::invalid_argument for non-ascending input or tau <= 0.
 */
MirrorCertificate certify_spectrum(std::span<const double> energies,
                                   double tau, double tol = kDefaultCertTol);
MirrorCertificate certify_spectrum(const SpectrumSpec& spec,
                                   double tol = kDefaultCertTol);

// eps_nu = omega0 + nu * omega; tau = pi/omega, phi0 = pi*omega0/omega,
// n(nu) = 0.
SpectrumSpec linear_spectrum(int n_levels, double omega0, double omega);

// eps_nu = omega0 + nu*(nu + 1 + (2p+1)/q)*omega; tau = q*pi/omega,
// phi0 = q*pi*omega0/omega, n(nu) = q*nu*(nu+1)/2 + p*nu.
SpectrumSpec quadratic_spectrum(int n_levels, double omega0, double omega,
                                int p, int q);

/**
 * @brief Near-homogeneous mirror spectrum: a slightly distorted cosine band.
 *
 * Raw levels -A*cos(pi*(nu+1)/(N+2)) are snapped to the nearest member of an
 * alternating residue class mod 2 (integers for an odd level count, half-odd
 * integers for an even count, so the result can stay antisymmetric), which
 * makes every gap an odd integer and the spectrum a valid mirror at tau = pi.
 * Antisymmetry eps_nu = -eps_{N-nu} is enforced exactly, so the
 * reconstructed chain carries no local fields.  Collisions between rounded
 * neighbors are repaired by bumping the outer level away from the center in
 * steps of 2; if any level ends up more than 3 away from its raw value the
 * amplitude is rejected as too small.
 */
SpectrumSpec cosine_distorted_spectrum(int n_levels, double amplitude);

// Default amplitude for an n-level cosine design, a0 * (n-1)^2.  Keeping the
// band-edge gap fixed while the chain grows means the couplings scale with
// the square of the length; a0 ~ 0.2311 reproduces the scale of the bundled
// 31-level design.
double default_cosine_amplitude(int n_levels, double a0 = 0.2311);

SpectrumSpec spectrum_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const SpectrumSpec& spec);
SpectrumSpec load_spectrum(const std::string& path);
void save_spectrum(const SpectrumSpec& spec, const std::string& path);

}  // namespace mirrorchain

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

#include "mirrorchain/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace mirrorchain {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ascending(std::span<const double> energies) {
  if (energies.size() < 2) {
    throw std::invalid_argument("need at least 2 levels");
  }
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    if (!(energies[i] < energies[i + 1])) {
      throw std::invalid_argument("energies must be strictly ascending (level " +
                                  std::to_string(i + 1) + ")");
    }
  }
}

// Reduce x to (-pi, pi].
double wrap_phase(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

// Nearest member of the residue class r mod 2, ties away from zero.
double round_to_class(double x, double r) {
  const double lo = r + 2.0 * std::floor((x - r) / 2.0);
  const double hi = lo + 2.0;
  const double dlo = x - lo, dhi = hi - x;
  if (dlo < dhi) return lo;
  if (dhi < dlo) return hi;
  return std::abs(hi) > std::abs(lo) ? hi : lo;
}

}  // namespace

MirrorCertificate certify_spectrum(std::span<const double> energies,
                                   double tau, double tol) {
  require_ascending(energies);
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");

  const int n = static_cast<int>(energies.size());
  MirrorCertificate cert;
  cert.tau = tau;
  cert.phi0 = wrap_phase(energies[0] * tau);
  cert.n_assign.resize(n);
  cert.residuals.resize(n);
  cert.worst_residual = 0.0;
  for (int nu = 0; nu < n; ++nu) {
    const double r = (energies[nu] * tau - cert.phi0) / kPi - nu;
    const double two_n = 2.0 * std::round(r / 2.0);
    cert.n_assign[nu] = static_cast<long long>(std::llround(two_n / 2.0));
    cert.residuals[nu] = std::abs(r - two_n);
    cert.worst_residual = std::max(cert.worst_residual, cert.residuals[nu]);
  }
  cert.valid = cert.worst_residual < tol;
  return cert;
}

MirrorCertificate certify_spectrum(const SpectrumSpec& spec, double tol) {
  return certify_spectrum(std::span<const double>(spec.energies), spec.tau,
                          tol);
}

SpectrumSpec linear_spectrum(int n_levels, double omega0, double omega) {
  if (n_levels < 2) throw std::invalid_argument("need at least 2 levels");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  SpectrumSpec spec;
  spec.tau = kPi / omega;
  spec.phi0 = kPi * omega0 / omega;
  spec.energies.resize(n_levels);
  spec.n_assign.assign(n_levels, 0);
  for (int nu = 0; nu < n_levels; ++nu) {
    spec.energies[nu] = omega0 + nu * omega;
  }
  return spec;
}

SpectrumSpec quadratic_spectrum(int n_levels, double omega0, double omega,
                                int p, int q) {
  if (n_levels < 2) throw std::invalid_argument("need at least 2 levels");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  SpectrumSpec spec;
  spec.tau = q * kPi / omega;
  spec.phi0 = q * kPi * omega0 / omega;
  spec.energies.resize(n_levels);
  spec.n_assign.resize(n_levels);
  for (int nu = 0; nu < n_levels; ++nu) {
    spec.energies[nu] =
        omega0 + nu * (nu + 1.0 + (2.0 * p + 1.0) / q) * omega;
    spec.n_assign[nu] =
        static_cast<long long>(q) * nu * (nu + 1) / 2 +
        static_cast<long long>(p) * nu;
  }
  return spec;
}

SpectrumSpec cosine_distorted_spectrum(int n_levels, double amplitude) {
  if (n_levels < 2) throw std::invalid_argument("need at least 2 levels");
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("amplitude must be positive");
  }
  const int n = n_levels;
  const int top = n - 1;  // N

  std::vector<double> raw(n);
  for (int nu = 0; nu < n; ++nu) {
    raw[nu] = -amplitude * std::cos(kPi * (nu + 1) / (n + 1));
  }

  // Residue class of level nu mod 2: alternating, so every gap is odd.  For
  // an odd level count the classes are integers and the central level must
  // be even (it is pinned to 0); for an even count exact antisymmetry forces
  // half-odd-integer levels (the central gap is twice the first positive
  // level and must still be odd), where either class offset works.
  auto build_upper = [&](int offset, std::vector<double>& out) -> double {
    out.assign(n, 0.0);
    double worst = 0.0;
    const int mid = n / 2;  // first level of the upper half
    double prev;
    if (n % 2 == 1) {
      out[mid] = 0.0;  // raw value is exactly 0
      prev = 0.0;
    } else {
      prev = -1.0;  // central gap 2*v >= 1
    }
    for (int nu = (n % 2 == 1) ? mid + 1 : mid; nu <= top; ++nu) {
      const double cls =
          ((nu + offset) % 2) + (n % 2 == 1 ? 0.0 : 0.5);
      double v = round_to_class(raw[nu], cls);
      while (v < prev + 1.0) v += 2.0;  // keep gaps odd and >= 1
      out[nu] = v;
      worst = std::max(worst, std::abs(v - raw[nu]));
      prev = v;
    }
    for (int nu = 0; nu < mid; ++nu) out[nu] = -out[top - nu];
    return worst;
  };

  std::vector<double> levels;
  double deviation;
  if (n % 2 == 1) {
    // Center pinned to class even: offset is forced.
    const int offset = (n / 2) % 2;
    deviation = build_upper(offset, levels);
  } else {
    std::vector<double> cand0, cand1;
    const double dev0 = build_upper(0, cand0);
    const double dev1 = build_upper(1, cand1);
    if (dev1 < dev0) {
      levels = std::move(cand1);
      deviation = dev1;
    } else {
      levels = std::move(cand0);
      deviation = dev0;
    }
  }

  // One repaired collision (rounding <= 1 plus a single bump of 2) is still a
  // small distortion of the band; anything beyond that means the amplitude
  // cannot hold this many levels apart.
  if (deviation > 3.0) {
    throw std::invalid_argument(
        "amplitude " + std::to_string(amplitude) +
        " too small for " + std::to_string(n_levels) +
        " levels; increase the amplitude");
  }

  SpectrumSpec spec;
  spec.energies = std::move(levels);
  spec.tau = kPi;
  const MirrorCertificate cert = certify_spectrum(
      std::span<const double>(spec.energies), spec.tau);
  if (!cert.valid) {
    throw std::runtime_error("cosine design failed its own certificate");
  }
  spec.phi0 = cert.phi0;
  spec.n_assign = cert.n_assign;
  return spec;
}

double default_cosine_amplitude(int n_levels, double a0) {
  const double n = n_levels - 1;
  return a0 * n * n;
}

SpectrumSpec spectrum_from_json(const nlohmann::json& j) {
  SpectrumSpec spec;
  spec.energies = j.at("energies").get<std::vector<double>>();
  spec.tau = j.at("tau").get<double>();
  spec.phi0 = j.value("phi0", 0.0);
  if (j.contains("n_assign")) {
    spec.n_assign = j.at("n_assign").get<std::vector<long long>>();
  }
  require_ascending(spec.energies);
  return spec;
}

nlohmann::json spectrum_to_json(const SpectrumSpec& spec) {
  return nlohmann::json{{"energies", spec.energies},
                        {"tau", spec.tau},
                        {"phi0", spec.phi0},
                        {"n_assign", spec.n_assign}};
}

SpectrumSpec load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spectrum file: " + path);
  nlohmann::json j;
  in >> j;
  return spectrum_from_json(j);
}

void save_spectrum(const SpectrumSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write spectrum file: " + path);
  out << spectrum_to_json(spec).dump(2) << '\n';
}

}  // namespace mirrorchain

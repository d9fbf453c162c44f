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

#include "mirrorchain/reconstruct.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mirrorchain/eigensystem.hpp"

namespace mirrorchain {

namespace {

constexpr double kDegeneracyFloor = 1e-10;  // of the spectral spread
constexpr double kSymmetrizeTol = 1e-6;     // relative pre-averaging asymmetry

double spectral_residual_of(const SymmetricChainSpec& chain,
                            std::span<const double> target) {
  const TridiagonalMatrix h1 = build_single_particle_matrix(chain);
  const Eigen::VectorXd eps = tridiagonal_eigenvalues(h1.diag, h1.off);
  double worst = 0.0;
  for (int nu = 0; nu < eps.size(); ++nu) {
    worst = std::max(worst, std::abs(eps[nu] - target[nu]));
  }
  return worst;
}

}  // namespace

Eigen::VectorXd persymmetric_weights(std::span<const double> energies) {
  const int n = static_cast<int>(energies.size());
  if (n < 2) throw std::invalid_argument("need at least 2 levels");
  const double spread = energies[n - 1] - energies[0];
  Eigen::VectorXd logw(n);
  for (int nu = 0; nu < n; ++nu) {
    double acc = 0.0;
    for (int mu = 0; mu < n; ++mu) {
      if (mu == nu) continue;
      const double gap = std::abs(energies[nu] - energies[mu]);
      if (gap < kDegeneracyFloor * spread) {
        throw std::invalid_argument(
            "near-degenerate target energies at levels " +
            std::to_string(std::min(mu, nu)) + "," +
            std::to_string(std::max(mu, nu)));
      }
      acc -= std::log(gap);
    }
    logw[nu] = acc;
  }
  const double shift = logw.maxCoeff();
  Eigen::VectorXd w = (logw.array() - shift).exp();
  w /= w.sum();
  return w;
}

ReconstructionReport reconstruct_direct(const SpectrumSpec& spectrum,
                                        double tol) {
  const auto& eps = spectrum.energies;
  const int n = static_cast<int>(eps.size());
  const Eigen::VectorXd w = persymmetric_weights(eps);
  const Eigen::Map<const Eigen::VectorXd> lambda(eps.data(), n);

  // Lanczos on diag(lambda) seeded with sqrt(w): the three-term recurrence
  // writes out exactly the tridiagonal entries of the chain carrying this
  // spectrum with these first-component weights.
  Eigen::MatrixXd basis(n, n);
  basis.col(0) = w.cwiseSqrt();
  Eigen::VectorXd diag(n), off(n - 1);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd u = lambda.cwiseProduct(basis.col(k));
    diag[k] = basis.col(k).dot(u);
    if (k == n - 1) break;
    u -= diag[k] * basis.col(k);
    if (k > 0) u -= off[k - 1] * basis.col(k - 1);
    // Full re-orthogonalization, twice; robustness over speed at these sizes.
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j <= k; ++j) {
        u -= basis.col(j).dot(u) * basis.col(j);
      }
    }
    const double norm = u.norm();
    if (!(norm > 0.0)) {
      throw std::runtime_error("Krylov breakdown at step " +
                               std::to_string(k + 1));
    }
    off[k] = norm;
    basis.col(k + 1) = u / norm;
  }

  // The exact solution is mirror symmetric; average out the rounding noise,
  // but refuse if the asymmetry is too large to be noise.
  const double j_scale = off.cwiseAbs().maxCoeff();
  const double scale = std::max(j_scale, diag.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    if (std::abs(diag[i] - diag[n - 1 - i]) > kSymmetrizeTol * scale) {
      throw std::runtime_error("reconstructed fields lost mirror symmetry");
    }
  }
  for (int i = 0; i < n - 1; ++i) {
    if (std::abs(off[i] - off[n - 2 - i]) > kSymmetrizeTol * scale) {
      throw std::runtime_error("reconstructed couplings lost mirror symmetry");
    }
  }

  ReconstructionReport report;
  report.method = ReconstructionMethod::direct;
  report.iterations = n;
  report.chain.n_sites = n;
  report.chain.fields.resize(n);
  report.chain.couplings.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    report.chain.fields[i] = 0.5 * (diag[i] + diag[n - 1 - i]);
  }
  for (int i = 0; i < n - 1; ++i) {
    const double j = 0.5 * (off[i] + off[n - 2 - i]);
    if (!(j > 0.0)) {
      throw std::runtime_error("reconstruction produced a nonpositive coupling");
    }
    report.chain.couplings[i] = j;
  }
  validate(report.chain);

  report.spectral_residual = spectral_residual_of(report.chain, eps);
  report.converged = report.spectral_residual < tol;
  return report;
}

AnnealSchedule schedule_from_json(const nlohmann::json& j) {
  AnnealSchedule s;
  s.t0 = j.value("t0", 0.0);
  s.cooling = j.value("cooling", 0.995);
  s.sweeps = j.value("sweeps", 6000);
  s.seed = j.value("seed", 0ull);
  if (!(s.cooling > 0.0 && s.cooling < 1.0)) {
    throw std::invalid_argument("cooling factor must be in (0, 1)");
  }
  if (s.sweeps <= 0) throw std::invalid_argument("sweeps must be positive");
  return s;
}

nlohmann::json schedule_to_json(const AnnealSchedule& s) {
  return nlohmann::json{
      {"t0", s.t0}, {"cooling", s.cooling}, {"sweeps", s.sweeps}, {"seed", s.seed}};
}

ReconstructionReport reconstruct_annealing(const SpectrumSpec& spectrum,
                                           std::uint64_t seed,
                                           const AnnealSchedule& schedule,
                                           double tol) {
  const auto& target = spectrum.energies;
  const int n = static_cast<int>(target.size());
  if (n < 2) throw std::invalid_argument("need at least 2 levels");
  for (int i = 0; i + 1 < n; ++i) {
    if (!(target[i] < target[i + 1])) {
      throw std::invalid_argument("energies must be strictly ascending");
    }
  }
  if (!(schedule.cooling > 0.0 && schedule.cooling < 1.0)) {
    throw std::invalid_argument("cooling factor must be in (0, 1)");
  }
  if (schedule.sweeps <= 0) {
    throw std::invalid_argument("sweeps must be positive");
  }

  const int top = n - 1;           // N
  const int n_j = (top + 1) / 2;   // free coupling pairs
  const int n_h = top / 2 + 1;     // free field pairs
  const double spread = target[n - 1] - target[0];
  const double center = 0.5 * (target[n - 1] + target[0]);
  const double j_hom =
      spread / (4.0 * std::cos(std::numbers::pi / (n + 1)));

  // theta = [J_1..J_{n_j}, h_0..h_{n_h-1}]; the mirror half is implied.
  Eigen::VectorXd theta(n_j + n_h);
  theta.head(n_j).setConstant(j_hom);
  theta.tail(n_h).setConstant(center);

  Eigen::VectorXd diag(n), off(top);
  auto expand = [&](const Eigen::VectorXd& th) {
    for (int i = 0; i < top; ++i) {
      off[i] = th[std::min(i, top - 1 - i)];
    }
    for (int i = 0; i < n; ++i) {
      diag[i] = th[n_j + std::min(i, top - i)];
    }
  };
  auto cost = [&](const Eigen::VectorXd& th) {
    expand(th);
    const Eigen::VectorXd eps = tridiagonal_eigenvalues(diag, off);
    double acc = 0.0;
    for (int nu = 0; nu < n; ++nu) {
      const double d = eps[nu] - target[nu];
      acc += d * d;
    }
    return acc;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const double coupling_floor = 1e-12 * j_hom;
  const double base_width = 0.25 * j_hom;

  double current_cost = cost(theta);
  Eigen::VectorXd best = theta;
  double best_cost = current_cost;

  // Default starting temperature from the cost response to typical
  // proposals near the start; a temperature at the spectral-spread scale
  // scrambles the scaled-homogeneous starting point beyond repair.
  double t0 = schedule.t0;
  if (!(t0 > 0.0)) {
    double acc = 0.0;
    const int probes = 8 * static_cast<int>(theta.size());
    for (int probe = 0; probe < probes; ++probe) {
      Eigen::VectorXd trial = theta;
      const int p = probe % theta.size();
      trial[p] += base_width * gauss(rng);
      if (p < n_j && trial[p] <= coupling_floor) continue;
      acc += std::abs(cost(trial) - current_cost);
    }
    t0 = std::max(2.0 * acc / probes, 1e-12 * spread * spread);
  }

  auto propose_param = [&](int p, double width, bool greedy) {
    const double old_value = theta[p];
    double next = old_value + width * gauss(rng);
    if (p < n_j && next <= coupling_floor) return;  // keep J positive
    theta[p] = next;
    const double c = cost(theta);
    const double dc = c - current_cost;
    bool accept = dc < 0.0;
    if (!accept && !greedy && temp > 0.0) {
      accept = unif(rng) < std::exp(-dc / temp);
    }
    if (accept) {
      current_cost = c;
      if (c < best_cost) {
        best_cost = c;
        best = theta;
      }
    } else {
      theta[p] = old_value;
    }
  };

  double temp = t0;
  for (int sweep = 0; sweep < schedule.sweeps; ++sweep) {
    const double width = base_width * std::sqrt(temp / t0);
    for (int p = 0; p < theta.size(); ++p) {
      propose_param(p, std::max(width, 1e-9 * j_hom), false);
    }
    temp *= schedule.cooling;
    // anchor the walk: drifting far above the best state found wastes the
    // remaining budget
    if (sweep % 50 == 49 && current_cost > 2.0 * best_cost) {
      theta = best;
      current_cost = best_cost;
    }
  }

  // Zero-temperature polish: shrink the step geometrically and keep only
  // improvements, starting from the best state seen.
  constexpr int kPolishSweeps = 200;
  theta = best;
  current_cost = best_cost;
  double width = base_width * 0.1;
  for (int sweep = 0; sweep < kPolishSweeps; ++sweep) {
    for (int p = 0; p < theta.size(); ++p) {
      propose_param(p, width, true);
    }
    width *= 0.82;
  }

  ReconstructionReport report;
  report.method = ReconstructionMethod::annealing;
  report.iterations = schedule.sweeps + kPolishSweeps;
  expand(best);
  report.chain.n_sites = n;
  report.chain.fields.assign(diag.data(), diag.data() + n);
  report.chain.couplings.assign(off.data(), off.data() + top);
  validate(report.chain);
  report.spectral_residual = spectral_residual_of(report.chain, target);
  report.converged = report.spectral_residual < tol;
  return report;
}

CouplingVariation coupling_variation(const SymmetricChainSpec& chain) {
  validate(chain);
  CouplingVariation v;
  v.min_coupling = *std::min_element(chain.couplings.begin(),
                                     chain.couplings.end());
  v.max_coupling = *std::max_element(chain.couplings.begin(),
                                     chain.couplings.end());
  v.relative = (v.max_coupling - v.min_coupling) /
               (v.max_coupling + v.min_coupling);
  return v;
}

nlohmann::json report_to_json(const ReconstructionReport& report) {
  return nlohmann::json{
      {"chain", chain_to_json(report.chain)},
      {"spectral_residual", report.spectral_residual},
      {"method", report.method == ReconstructionMethod::direct ? "direct"
                                                               : "annealing"},
      {"iterations", report.iterations},
      {"converged", report.converged}};
}

}  // namespace mirrorchain

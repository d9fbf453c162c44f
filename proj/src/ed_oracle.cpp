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

#include "mirrorchain/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "mirrorchain/parallel_detail.hpp"
#include "mirrorchain/thermal.hpp"

namespace mirrorchain {

using complexd = std::complex<double>;

namespace {
constexpr int kMaxSites = 12;
}

void DenseSpinModel::ensure_solved() const {
  if (solved) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense diagonalization failed");
  }
  energies = solver.eigenvalues();
  states = solver.eigenvectors();
  solved = true;
}

DenseSpinModel build_spin_hamiltonian(const SymmetricChainSpec& spec) {
  validate(spec);
  if (spec.n_sites > kMaxSites) {
    throw std::invalid_argument(
        "dense spin model capped at " + std::to_string(kMaxSites) +
        " sites, got " + std::to_string(spec.n_sites));
  }
  const int n = spec.n_sites;
  const int dim = 1 << n;
  DenseSpinModel model;
  model.n_sites = n;
  model.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);

  for (int s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i < n; ++i) {
      if (s & (1 << i)) diag += spec.fields[i];  // h_i (S_i^z + 1/2) = h_i n_i
    }
    model.hamiltonian(s, s) = diag;
    // 2 J_i (S^x S^x + S^y S^y) hops one up-spin across the bond.
    for (int i = 1; i < n; ++i) {
      const int mask = (1 << i) | (1 << (i - 1));
      const bool a = s & (1 << (i - 1));
      const bool b = s & (1 << i);
      if (a != b) {
        const int t = s ^ mask;
        if (t > s) {
          model.hamiltonian(t, s) += spec.couplings[i - 1];
          model.hamiltonian(s, t) += spec.couplings[i - 1];
        }
      }
    }
  }
  return model;
}

Eigen::MatrixXd dense_spin_operator(int n_sites, const SpinOpSpec& op) {
  if (op.site < 0 || op.site >= n_sites) {
    throw std::invalid_argument("operator site out of range");
  }
  const int dim = 1 << n_sites;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const int bit = 1 << op.site;
  for (int s = 0; s < dim; ++s) {
    if (op.axis == SpinAxis::z) {
      m(s, s) = (s & bit) ? 0.5 : -0.5;
    } else {
      m(s ^ bit, s) = 0.5;
    }
  }
  return m;
}

CorrelationSeries ed_correlation(const DenseSpinModel& model,
                                 const SpinOpSpec& op_a,
                                 const SpinOpSpec& op_b, double beta,
                                 std::vector<double> times) {
  if (beta < 0.0 || std::isnan(beta)) {
    throw std::invalid_argument("beta must be nonnegative");
  }
  model.ensure_solved();
  const int dim = model.dimension();
  const Eigen::VectorXd& e = model.energies;

  const Eigen::MatrixXd a_dense = dense_spin_operator(model.n_sites, op_a);
  const Eigen::MatrixXd b_dense = dense_spin_operator(model.n_sites, op_b);
  const Eigen::MatrixXd a_eig =
      model.states.transpose() * a_dense * model.states;
  const Eigen::MatrixXd b_eig =
      model.states.transpose() * b_dense * model.states;
  // G_{nm} = A_{nm} B_{mn}; C(t) = sum_n rho_n sum_m e^{i(E_n - E_m) t} G_{nm}.
  const Eigen::MatrixXd g = a_eig.cwiseProduct(b_eig.transpose());

  Eigen::VectorXd rho(dim);
  if (std::isinf(beta)) {
    const double spread = e[dim - 1] - e[0];
    const double tol = 1e-9 * std::max(1.0, spread);
    int ground = 0;
    while (ground < dim && e[ground] - e[0] <= tol) ++ground;
    rho.setZero();
    rho.head(ground).setConstant(1.0 / ground);
  } else {
    rho = ((-beta) * (e.array() - e[0])).exp().matrix();
    rho /= rho.sum();
  }

  CorrelationSeries series;
  series.observable = "ed";
  series.sites = {op_a.site, op_b.site};
  series.temperature = temperature_from_beta(beta);
  series.times = std::move(times);
  series.values.resize(series.times.size());

  detail::parallel_for_indices(
      static_cast<std::ptrdiff_t>(series.times.size()),
      [&](std::ptrdiff_t it) {
        const double t = series.times[it];
        Eigen::VectorXd ur(dim), ui(dim);
        for (int n = 0; n < dim; ++n) {
          ur[n] = std::cos(e[n] * t);
          ui[n] = std::sin(e[n] * t);
        }
        // C(t) = sum_n rho_n u_n [G conj(u)]_n with u_n = e^{i E_n t}
        const Eigen::VectorXd g_ur = g * ur;
        const Eigen::VectorXd g_ui = g * ui;
        double re = 0.0, im = 0.0;
        for (int n = 0; n < dim; ++n) {
          re += rho[n] * (ur[n] * g_ur[n] + ui[n] * g_ui[n]);
          im += rho[n] * (ui[n] * g_ur[n] - ur[n] * g_ui[n]);
        }
        series.values[it] = complexd(re, im);
      });
  return series;
}

std::vector<double> subset_sum_spectrum(const Eigen::VectorXd& single_particle) {
  const int n = static_cast<int>(single_particle.size());
  if (n > kMaxSites) {
    throw std::invalid_argument("subset-sum spectrum capped at 12 levels");
  }
  std::vector<double> sums{0.0};
  sums.reserve(std::size_t{1} << n);
  for (int nu = 0; nu < n; ++nu) {
    const std::size_t count = sums.size();
    for (std::size_t i = 0; i < count; ++i) {
      sums.push_back(sums[i] + single_particle[nu]);
    }
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace mirrorchain

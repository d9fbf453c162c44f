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

#include "mirrorchain/reference.hpp"

#include <stdexcept>
#include <utility>

#include "mirrorchain/majorana_detail.hpp"
#include "mirrorchain/pfaffian.hpp"

namespace mirrorchain::reference {

using complexd = std::complex<double>;

namespace {

Eigen::MatrixXd occupation_matrix(const EigenSystem& eig,
                                  const ThermalState& state) {
  const Eigen::Map<const Eigen::VectorXd> f(state.occupation.data(),
                                            state.occupation.size());
  return eig.eigenvectors * f.asDiagonal() * eig.eigenvectors.transpose();
}

}  // namespace

CorrelationSeries zz_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int j, int k,
                                 std::vector<double> times) {
  const int n = eig.size();
  if (j < 0 || j >= n || k < 0 || k >= n) {
    throw std::invalid_argument("site index out of range");
  }
  const Eigen::MatrixXd f = occupation_matrix(eig, state);
  const Eigen::MatrixXd one_minus_f =
      Eigen::MatrixXd::Identity(n, n) - f;
  const double constant =
      f(j, j) * f(k, k) - 0.5 * (f(j, j) + f(k, k)) + 0.25;

  CorrelationSeries series;
  series.observable = "zz";
  series.sites = {j, k};
  series.temperature = state.temperature();
  series.times = std::move(times);
  series.values.resize(series.times.size());
  for (std::size_t it = 0; it < series.times.size(); ++it) {
    const Propagator u = propagator(eig, series.times[it]);
    const Eigen::MatrixXcd p = u.matrix.conjugate() * f;      // <c^+(t) c>
    const Eigen::MatrixXcd q = u.matrix * one_minus_f;        // <c(t) c^+>
    series.values[it] = constant + p(j, k) * q(j, k);
  }
  return series;
}

namespace {

CorrelationSeries string_series(const EigenSystem& eig,
                                const ThermalState& state, int j, int k,
                                std::vector<double> times) {
  const int n = eig.size();
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw std::invalid_argument("site index out of range");
  }
  if (j > k) throw std::invalid_argument("need j <= k");

  const Eigen::MatrixXd f = occupation_matrix(eig, state);
  const Eigen::MatrixXd one_minus_f =
      Eigen::MatrixXd::Identity(n, n) - f;
  const Eigen::MatrixXd k_matrix =
      Eigen::MatrixXd::Identity(n, n) - 2.0 * f;

  const auto ops_t = detail::x_operator_string(j);
  const auto ops_0 = detail::x_operator_string(k);

  CorrelationSeries series;
  series.observable = j == k ? "xx" : "xx_cross";
  series.sites = j == k ? std::vector<int>{k} : std::vector<int>{j, k};
  series.temperature = state.temperature();
  series.times = std::move(times);
  series.values.resize(series.times.size());
  for (std::size_t it = 0; it < series.times.size(); ++it) {
    const Propagator u = propagator(eig, series.times[it]);
    const Eigen::MatrixXcd p = u.matrix.conjugate() * f;
    const Eigen::MatrixXcd q = u.matrix * one_minus_f;
    const Eigen::MatrixXcd m =
        detail::majorana_contraction_matrix(ops_t, ops_0, p, q, k_matrix);
    series.values[it] = 0.25 * pfaffian(m);
  }
  return series;
}

}  // namespace

CorrelationSeries xx_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int site,
                                 std::vector<double> times) {
  return string_series(eig, state, site, site, std::move(times));
}

CorrelationSeries xx_cross_correlation(const EigenSystem& eig,
                                       const ThermalState& state, int j,
                                       int k, std::vector<double> times) {
  return string_series(eig, state, j, k, std::move(times));
}

}  // namespace mirrorchain::reference

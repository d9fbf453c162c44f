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

#include "mirrorchain/string_correlators.hpp"

#include <stdexcept>
#include <utility>

#include "mirrorchain/majorana_detail.hpp"
#include "mirrorchain/parallel_detail.hpp"
#include "mirrorchain/pfaffian.hpp"

namespace mirrorchain {

using complexd = std::complex<double>;

namespace detail {

std::vector<MajoranaOp> x_operator_string(int site) {
  std::vector<MajoranaOp> ops;
  ops.reserve(2 * site + 1);
  for (int l = 0; l < site; ++l) {
    ops.push_back({l, false});
    ops.push_back({l, true});
  }
  ops.push_back({site, false});
  return ops;
}

// Ordered pair contraction <O_a(t) O_b(0)> for Majorana operators
// A = c^+ + c, B = c^+ - c, expressed through
//   P(t) = <c^+(t) c> block, Q(t) = <c(t) c^+> block.
complexd cross_contraction(const MajoranaOp& a, const MajoranaOp& b,
                           const Eigen::MatrixXcd& p,
                           const Eigen::MatrixXcd& q) {
  const complexd pv = p(a.site, b.site);
  const complexd qv = q(a.site, b.site);
  if (!a.is_b && !b.is_b) return pv + qv;   // <A A>
  if (!a.is_b && b.is_b) return qv - pv;    // <A B>
  if (a.is_b && !b.is_b) return pv - qv;    // <B A>
  return -(pv + qv);                        // <B B>
}

// Equal-time contraction for a < b in the same block, via K = 1 - 2F.
double equal_time_contraction(const MajoranaOp& a, const MajoranaOp& b,
                              const Eigen::MatrixXd& k_matrix) {
  if (a.is_b == b.is_b) return 0.0;  // <A A> = <B B> = 0 off the diagonal
  const double k = k_matrix(a.site, b.site);
  return a.is_b ? -k : k;  // <A B> = K, <B A> = -K
}

Eigen::MatrixXcd majorana_contraction_matrix(
    const std::vector<MajoranaOp>& ops_t, const std::vector<MajoranaOp>& ops_0,
    const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q,
    const Eigen::MatrixXd& k_matrix) {
  const int nt = static_cast<int>(ops_t.size());
  const int n0 = static_cast<int>(ops_0.size());
  const int dim = nt + n0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const bool a_in_t = a < nt;
    const MajoranaOp& oa = a_in_t ? ops_t[a] : ops_0[a - nt];
    for (int b = a + 1; b < dim; ++b) {
      const bool b_in_t = b < nt;
      const MajoranaOp& ob = b_in_t ? ops_t[b] : ops_0[b - nt];
      complexd value;
      if (a_in_t && !b_in_t) {
        value = cross_contraction(oa, ob, p, q);
      } else {
        value = equal_time_contraction(oa, ob, k_matrix);
      }
      m(a, b) = value;
      m(b, a) = -value;
    }
  }
  return m;
}

}  // namespace detail

namespace {

// Sub-block two-point functions on sites 0..s for one time:
//   P(t) = W diag(f e^{+i eps t}) W^T,  Q(t) = W diag((1-f) e^{-i eps t}) W^T
// with W the first s+1 rows of the eigenvector matrix.
void two_point_blocks(const EigenSystem& eig, const ThermalState& state,
                      int max_site, double t, Eigen::MatrixXcd& p,
                      Eigen::MatrixXcd& q) {
  const int n = eig.size();
  const int rows = max_site + 1;
  const auto w = eig.eigenvectors.topRows(rows);
  Eigen::VectorXcd dp(n), dq(n);
  for (int nu = 0; nu < n; ++nu) {
    const complexd phase = std::polar(1.0, eig.eigenvalues[nu] * t);
    dp[nu] = state.occupation[nu] * phase;
    dq[nu] = (1.0 - state.occupation[nu]) * std::conj(phase);
  }
  const Eigen::MatrixXcd wc = w.cast<complexd>();
  p.noalias() = wc * dp.asDiagonal() * wc.transpose();
  q.noalias() = wc * dq.asDiagonal() * wc.transpose();
}

CorrelationSeries string_series(const EigenSystem& eig,
                                const ThermalState& state, int j, int k,
                                std::vector<double> times) {
  const int n = eig.size();
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw std::invalid_argument("site index out of range");
  }
  if (j > k) throw std::invalid_argument("need j <= k");
  if (static_cast<int>(state.occupation.size()) != n) {
    throw std::invalid_argument("thermal state does not match the chain");
  }

  const auto ops_t = detail::x_operator_string(j);
  const auto ops_0 = detail::x_operator_string(k);
  const int max_site = k;

  // Equal-time kernel K = 1 - 2F restricted to the string sites.
  const auto w = eig.eigenvectors.topRows(max_site + 1);
  const Eigen::Map<const Eigen::VectorXd> f(state.occupation.data(), n);
  Eigen::MatrixXd k_matrix = -2.0 * (w * f.asDiagonal() * w.transpose());
  k_matrix.diagonal().array() += 1.0;

  CorrelationSeries series;
  series.observable = j == k ? "xx" : "xx_cross";
  series.sites = j == k ? std::vector<int>{k} : std::vector<int>{j, k};
  series.temperature = state.temperature();
  series.times = std::move(times);
  series.values.resize(series.times.size());

  detail::parallel_for_indices(
      static_cast<std::ptrdiff_t>(series.times.size()),
      [&](std::ptrdiff_t it) {
        Eigen::MatrixXcd p, q;
        two_point_blocks(eig, state, max_site, series.times[it], p, q);
        const Eigen::MatrixXcd m =
            detail::majorana_contraction_matrix(ops_t, ops_0, p, q, k_matrix);
        series.values[it] = 0.25 * pfaffian(m);
      });
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

}  // namespace mirrorchain

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

#include "mirrorchain/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mirrorchain {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kZeroComponentTol = 1e-12;

// Implicit-shift QL on (d, e); e[i] couples sites i and i+1, e[n-1] is
// scratch.  Rotations are accumulated into z when it is non-empty.
void tql_implicit_shift(Eigen::VectorXd& d, Eigen::VectorXd& e,
                        Eigen::MatrixXd& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  const bool with_vectors = z.size() > 0;
  if (n < 2) return;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps) {
          throw std::runtime_error(
              "tridiagonal QL failed to converge for eigenvalue " +
              std::to_string(l) + " after " + std::to_string(kMaxSweeps) +
              " sweeps");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (with_vectors) {
            for (int k = 0; k < n; ++k) {
              f = z(k, i + 1);
              z(k, i + 1) = s * z(k, i) + c * f;
              z(k, i) = c * z(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigenSystem diagonalize(const TridiagonalMatrix& matrix) {
  const int n = matrix.size();
  if (n < 1) throw std::invalid_argument("empty matrix");
  if (matrix.off.size() != n - 1) {
    throw std::invalid_argument("off-diagonal length mismatch");
  }

  Eigen::VectorXd d = matrix.diag;
  Eigen::VectorXd e(n);
  e.head(n - 1) = matrix.off;
  e[n - 1] = 0.0;
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  tql_implicit_shift(d, e, z);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a] < d[b]; });

  EigenSystem eig;
  eig.eigenvalues.resize(n);
  eig.eigenvectors.resize(n, n);
  for (int nu = 0; nu < n; ++nu) {
    eig.eigenvalues[nu] = d[order[nu]];
    eig.eigenvectors.col(nu) = z.col(order[nu]);
  }

  // Sign convention: first non-negligible component positive.
  for (int nu = 0; nu < n; ++nu) {
    const double scale = eig.eigenvectors.col(nu).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      const double x = eig.eigenvectors(i, nu);
      if (std::abs(x) > kZeroComponentTol * scale) {
        if (x < 0.0) eig.eigenvectors.col(nu) *= -1.0;
        break;
      }
    }
  }
  return eig;
}

Eigen::VectorXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag,
                                        const Eigen::VectorXd& off) {
  const int n = static_cast<int>(diag.size());
  Eigen::VectorXd d = diag;
  Eigen::VectorXd e(n);
  if (n > 1) e.head(n - 1) = off.head(n - 1);
  e[n - 1] = 0.0;
  Eigen::MatrixXd z;  // empty: skip vector accumulation
  tql_implicit_shift(d, e, z);
  std::sort(d.data(), d.data() + n);
  return d;
}

SignChangeReport check_sign_changes(const EigenSystem& eig) {
  const int n = eig.size();
  SignChangeReport report;
  report.counts.resize(n, 0);
  report.skipped.resize(n, 0);
  for (int nu = 0; nu < n; ++nu) {
    const double scale = eig.eigenvectors.col(nu).cwiseAbs().maxCoeff();
    const double floor = kZeroComponentTol * scale;
    int prev_sign = 0;
    for (int i = 0; i < n; ++i) {
      const double x = eig.eigenvectors(i, nu);
      if (std::abs(x) <= floor) {
        ++report.skipped[nu];
        continue;
      }
      const int sign = x > 0.0 ? 1 : -1;
      if (prev_sign != 0 && sign != prev_sign) ++report.counts[nu];
      prev_sign = sign;
    }
  }
  return report;
}

int expected_sign_changes(int nu, int n) { return n - 1 - nu; }

int parity_signature(int nu, int n) {
  return (n - 1 - nu) % 2 == 0 ? 1 : -1;
}

double check_parity(const EigenSystem& eig) {
  const int n = eig.size();
  double worst = 0.0;
  for (int nu = 0; nu < n; ++nu) {
    const double sigma = parity_signature(nu, n);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(eig.eigenvectors(i, nu) -
                                       sigma * eig.eigenvectors(n - 1 - i, nu)));
    }
  }
  return worst;
}

}  // namespace mirrorchain

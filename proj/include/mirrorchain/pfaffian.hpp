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

#include <complex>

#include <Eigen/Dense>

namespace mirrorchain {

/**
 * @brief Pfaffian of a complex antisymmetric matrix.
 *
 * Skew-symmetric Gaussian elimination in the Parlett-Reid style with partial
 * pivoting (see arXiv:1102.3440 for the real-case background).  The input
 * must be antisymmetric to 1e-12 of its largest entry and of even dimension;
 * violations raise std::invalid_argument.  Every call self-checks
 * Pf^2 = det against an LU determinant of the original matrix (compared in
 * the log domain so large matrices cannot over- or underflow the check) and
 * raises std::runtime_error on disagreement beyond 1e-8 relative.
 */
std::complex<double> pfaffian(const Eigen::MatrixXcd& antisym);

}  // namespace mirrorchain

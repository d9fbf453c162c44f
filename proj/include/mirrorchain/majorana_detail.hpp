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
#include <vector>

#include <Eigen/Dense>

namespace mirrorchain::detail {

// One Majorana factor: A_l = c_l^+ + c_l (is_b = false) or
// B_l = c_l^+ - c_l (is_b = true).  A_l B_l = 1 - 2 n_l.
struct MajoranaOp {
  int site = 0;
  bool is_b = false;
};

// S_site^x as an ordered Majorana product (times 1/2):
// A_0 B_0 ... A_{site-1} B_{site-1} A_site.
std::vector<MajoranaOp> x_operator_string(int site);

std::complex<double> cross_contraction(const MajoranaOp& a,
                                       const MajoranaOp& b,
                                       const Eigen::MatrixXcd& p,
                                       const Eigen::MatrixXcd& q);

double equal_time_contraction(const MajoranaOp& a, const MajoranaOp& b,
                              const Eigen::MatrixXd& k_matrix);

// Antisymmetric matrix of ordered pair contractions for the operator list
// [ops_t at time t, then ops_0 at time 0]; entry (a, b) with a < b is
// <O_a O_b> and the lower triangle is its negative.
Eigen::MatrixXcd majorana_contraction_matrix(
    const std::vector<MajoranaOp>& ops_t, const std::vector<MajoranaOp>& ops_0,
    const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q,
    const Eigen::MatrixXd& k_matrix);

}  // namespace mirrorchain::detail

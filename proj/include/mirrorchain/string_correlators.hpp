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

#include <vector>

#include "mirrorchain/dynamics.hpp"

namespace mirrorchain {

/**
 * @brief <S_k^x(t) S_k^x(0)> at arbitrary temperature.
 *
 * Under the Jordan-Wigner map S_k^x is the Majorana string
 * (1/2) A_0 B_0 ... A_{k-1} B_{k-1} A_k with A_l = c_l^+ + c_l and
 * B_l = c_l^+ - c_l, so the two-time correlator is (1/4) times the Pfaffian
 * of the (4k+2)-dimensional matrix of ordered pair contractions (time-t
 * block first, then the time-0 block, sites ascending, A before B).  Cost is
 * O((4k+2)^3) per time point; points run in parallel.
 */
CorrelationSeries xx_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int site,
                                 std::vector<double> times);

// <S_j^x(t) S_k^x(0)> for j <= k; the same Pfaffian construction with
// strings of lengths 2j+1 and 2k+1.
CorrelationSeries xx_cross_correlation(const EigenSystem& eig,
                                       const ThermalState& state, int j,
                                       int k, std::vector<double> times);

}  // namespace mirrorchain

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

#include "mirrorchain/dynamics.hpp"
#include "mirrorchain/string_correlators.hpp"

namespace mirrorchain::reference {

// Serial reference implementations of the correlators.  These build the full
// propagator and two-point matrices with plain matrix products per time
// point instead of the mode-sum kernels used by the parallel versions, so a
// comparison exercises both the threading and the optimized algebra.

CorrelationSeries zz_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int j, int k,
                                 std::vector<double> times);

CorrelationSeries xx_correlation(const EigenSystem& eig,
                                 const ThermalState& state, int site,
                                 std::vector<double> times);

CorrelationSeries xx_cross_correlation(const EigenSystem& eig,
                                       const ThermalState& state, int j,
                                       int k, std::vector<double> times);

}  // namespace mirrorchain::reference

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

// Wall-time comparison of the OpenMP correlator kernels against the serial
// reference implementations on a 41-site mirror chain.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirrorchain/dynamics.hpp"
#include "mirrorchain/eigensystem.hpp"
#include "mirrorchain/reconstruct.hpp"
#include "mirrorchain/reference.hpp"
#include "mirrorchain/spectrum.hpp"
#include "mirrorchain/string_correlators.hpp"

using namespace mirrorchain;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds(start);
}

}  // namespace

int main() {
  const SpectrumSpec spec =
      cosine_distorted_spectrum(41, default_cosine_amplitude(41));
  const ReconstructionReport report = reconstruct_direct(spec);
  const EigenSystem eig =
      diagonalize(build_single_particle_matrix(report.chain));
  const ThermalState state = ThermalState::from_temperature(eig, 0.0);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("41-site chain, %d threads\n", threads);
  std::printf("%-28s %10s %10s %8s %10s\n", "kernel", "serial[s]", "omp[s]",
              "speedup", "max|diff|");

  {
    std::vector<double> grid;
    for (int i = 0; i < 96; ++i) grid.push_back(i * std::numbers::pi / 48.0);
    CorrelationSeries serial, parallel;
    const double ts =
        timed([&] { serial = reference::xx_correlation(eig, state, 19, grid); });
    const double tp =
        timed([&] { parallel = xx_correlation(eig, state, 19, grid); });
    double diff = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      diff = std::max(diff, std::abs(serial.values[i] - parallel.values[i]));
    }
    std::printf("%-28s %10.3f %10.3f %8.2f %10.2e\n", "xx autocorrelation (site 19)",
                ts, tp, ts / tp, diff);
  }
  {
    std::vector<double> grid;
    for (int i = 0; i < 20000; ++i) grid.push_back(i * 1e-3);
    CorrelationSeries serial, parallel;
    const double ts = timed(
        [&] { serial = reference::zz_correlation(eig, state, 40, 0, grid); });
    const double tp =
        timed([&] { parallel = zz_correlation(eig, state, 40, 0, grid); });
    double diff = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      diff = std::max(diff, std::abs(serial.values[i] - parallel.values[i]));
    }
    std::printf("%-28s %10.3f %10.3f %8.2f %10.2e\n", "zz end-to-end", ts, tp,
                ts / tp, diff);
  }
  return 0;
}

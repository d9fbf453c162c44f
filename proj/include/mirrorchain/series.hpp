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
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mirrorchain {

/**
 * @brief Time series of a two-point correlation <A(t) B(0)> at fixed
 * temperature.
 */
struct CorrelationSeries {
  std::string observable;  // "zz", "xx", ...
  std::vector<int> sites;
  double temperature = 0.0;  // may be 0 or +inf
  std::string chain_hash;    // optional tag linking back to the chain file
  std::vector<double> times;
  std::vector<std::complex<double>> values;

  std::size_t size() const { return times.size(); }
};

// CSV layout: one JSON metadata line, then a "t,re,im" header and the data
// rows, doubles printed round-trip exact.
void write_csv(const CorrelationSeries& series, std::ostream& out);
std::string to_csv(const CorrelationSeries& series);

nlohmann::json series_to_json(const CorrelationSeries& series);

/**
 * @brief Max |C(t + period) - C(t)| over all grid pairs (t, t + period).
 *
 * Grid points are matched with an absolute slack of 1e-9 * max(1, |t|).
 * Throws std::invalid_argument if the grid contains no matching pair.
 */
double periodicity_check(const CorrelationSeries& series, double period);

}  // namespace mirrorchain

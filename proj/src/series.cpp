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

#include "mirrorchain/series.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mirrorchain {

namespace {

nlohmann::json temperature_to_json(double t) {
  if (std::isinf(t)) return "inf";
  return t;
}

void print_double(std::ostream& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out << buf;
}

}  // namespace

void write_csv(const CorrelationSeries& series, std::ostream& out) {
  nlohmann::json meta{{"observable", series.observable},
                      {"sites", series.sites},
                      {"temperature", temperature_to_json(series.temperature)},
                      {"chain_hash", series.chain_hash}};
  out << meta.dump() << '\n';
  out << "t,re,im\n";
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    print_double(out, series.times[i]);
    out << ',';
    print_double(out, series.values[i].real());
    out << ',';
    print_double(out, series.values[i].imag());
    out << '\n';
  }
}

std::string to_csv(const CorrelationSeries& series) {
  std::ostringstream out;
  write_csv(series, out);
  return out.str();
}

nlohmann::json series_to_json(const CorrelationSeries& series) {
  std::vector<double> re(series.size()), im(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    re[i] = series.values[i].real();
    im[i] = series.values[i].imag();
  }
  return nlohmann::json{
      {"observable", series.observable},
      {"sites", series.sites},
      {"temperature", temperature_to_json(series.temperature)},
      {"chain_hash", series.chain_hash},
      {"times", series.times},
      {"re", re},
      {"im", im}};
}

double periodicity_check(const CorrelationSeries& series, double period) {
  if (series.times.size() != series.values.size()) {
    throw std::invalid_argument("series times/values size mismatch");
  }
  double worst = -1.0;
  // Grids are short; a quadratic scan keeps the matching rule obvious.
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    const double shifted = series.times[i] + period;
    const double slack = 1e-9 * std::max(1.0, std::abs(shifted));
    for (std::size_t j = 0; j < series.times.size(); ++j) {
      if (std::abs(series.times[j] - shifted) <= slack) {
        worst = std::max(worst, std::abs(series.values[j] - series.values[i]));
        break;
      }
    }
  }
  if (worst < 0.0) {
    throw std::invalid_argument(
        "grid contains no pair separated by the requested period");
  }
  return worst;
}

}  // namespace mirrorchain

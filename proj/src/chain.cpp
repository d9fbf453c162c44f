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

#include "mirrorchain/chain.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mirrorchain {

namespace {

constexpr double kMirrorTol = 1e-12;
constexpr double kCouplingWarnFloor = 1e-8;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<std::string> validate(const SymmetricChainSpec& spec) {
  if (spec.n_sites < 2) {
    throw std::invalid_argument("chain needs at least 2 sites, got " +
                                std::to_string(spec.n_sites));
  }
  const int n = spec.n_sites;
  if (static_cast<int>(spec.couplings.size()) != n - 1) {
    throw std::invalid_argument(
        "expected " + std::to_string(n - 1) + " couplings, got " +
        std::to_string(spec.couplings.size()));
  }
  if (static_cast<int>(spec.fields.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " fields, got " +
                                std::to_string(spec.fields.size()));
  }
  for (int i = 0; i < n - 1; ++i) {
    if (!(spec.couplings[i] > 0.0)) {
      // 1-based to match the J_1..J_N naming
      throw std::invalid_argument("coupling J_" + std::to_string(i + 1) +
                                  " = " + std::to_string(spec.couplings[i]) +
                                  " is not strictly positive");
    }
  }

  const double j_scale = max_abs(spec.couplings);
  const double h_scale = std::max(max_abs(spec.fields), j_scale);
  for (int i = 0; i < n; ++i) {
    if (std::abs(spec.fields[i] - spec.fields[n - 1 - i]) >
        kMirrorTol * std::max(1.0, h_scale)) {
      throw std::invalid_argument("fields break mirror symmetry at site " +
                                  std::to_string(i));
    }
  }
  for (int i = 0; i < n - 1; ++i) {
    if (std::abs(spec.couplings[i] - spec.couplings[n - 2 - i]) >
        kMirrorTol * std::max(1.0, j_scale)) {
      throw std::invalid_argument("couplings break mirror symmetry at bond " +
                                  std::to_string(i + 1));
    }
  }

  std::vector<std::string> warnings;
  for (int i = 0; i < n - 1; ++i) {
    if (spec.couplings[i] < kCouplingWarnFloor * j_scale) {
      warnings.push_back("coupling J_" + std::to_string(i + 1) +
                         " is below 1e-8 of the largest coupling");
    }
  }
  return warnings;
}

SymmetricChainSpec chain_from_json(const nlohmann::json& j) {
  SymmetricChainSpec spec;
  spec.n_sites = j.at("n_sites").get<int>();
  spec.couplings = j.at("couplings").get<std::vector<double>>();
  spec.fields = j.at("fields").get<std::vector<double>>();
  validate(spec);
  return spec;
}

nlohmann::json chain_to_json(const SymmetricChainSpec& spec) {
  return nlohmann::json{{"n_sites", spec.n_sites},
                        {"couplings", spec.couplings},
                        {"fields", spec.fields}};
}

SymmetricChainSpec load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open chain file: " + path);
  nlohmann::json j;
  in >> j;
  // Reconstruction reports wrap the chain; accept either layout.
  if (j.contains("chain")) return chain_from_json(j.at("chain"));
  return chain_from_json(j);
}

void save_chain(const SymmetricChainSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write chain file: " + path);
  out << chain_to_json(spec).dump(2) << '\n';
}

std::string chain_hash(const SymmetricChainSpec& spec) {
  std::ostringstream canon;
  canon << "chain|n=" << spec.n_sites << "|J=";
  char buf[40];
  for (double x : spec.couplings) {
    std::snprintf(buf, sizeof buf, "%.17g,", x);
    canon << buf;
  }
  canon << "|h=";
  for (double x : spec.fields) {
    std::snprintf(buf, sizeof buf, "%.17g,", x);
    canon << buf;
  }
  const std::string s = canon.str();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Eigen::MatrixXd TridiagonalMatrix::dense() const {
  const int n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = diag[i];
  for (int i = 0; i < n - 1; ++i) m(i, i + 1) = m(i + 1, i) = off[i];
  return m;
}

TridiagonalMatrix build_single_particle_matrix(const SymmetricChainSpec& spec) {
  validate(spec);
  TridiagonalMatrix m;
  m.diag = Eigen::Map<const Eigen::VectorXd>(spec.fields.data(),
                                             spec.fields.size());
  m.off = Eigen::Map<const Eigen::VectorXd>(spec.couplings.data(),
                                            spec.couplings.size());
  return m;
}

}  // namespace mirrorchain

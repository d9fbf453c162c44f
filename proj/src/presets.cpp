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

#include "mirrorchain/presets.hpp"

#include <numbers>

namespace mirrorchain::presets {

SpectrumSpec mirror31() {
  static const double half[] = {21,  40,  61,  80,  97,  116, 131, 146,
                                161, 172, 183, 192, 199, 204, 207};
  SpectrumSpec spec;
  spec.tau = std::numbers::pi;
  spec.energies.reserve(31);
  for (int i = 14; i >= 0; --i) spec.energies.push_back(-half[i]);
  spec.energies.push_back(0.0);
  for (int i = 0; i < 15; ++i) spec.energies.push_back(half[i]);
  const MirrorCertificate cert = certify_spectrum(
      std::span<const double>(spec.energies), spec.tau);
  spec.phi0 = cert.phi0;
  spec.n_assign = cert.n_assign;
  return spec;
}

}  // namespace mirrorchain::presets

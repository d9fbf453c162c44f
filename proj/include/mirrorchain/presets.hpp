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

#include "mirrorchain/spectrum.hpp"

namespace mirrorchain::presets {

// Bundled 31-level integer mirror spectrum with tau = pi (every gap odd):
// 0, +-21, +-40, +-61, +-80, +-97, +-116, +-131, +-146, +-161, +-172,
// +-183, +-192, +-199, +-204, +-207.  Reconstructs to a field-free chain
// whose couplings stay within [101.5, 108.5], a +-3.3 percent variation.
// Also shipped as recipes/spectrum31.json.
SpectrumSpec mirror31();

}  // namespace mirrorchain::presets

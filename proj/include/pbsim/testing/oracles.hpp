// Copyright 2026 The pbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pbsim/fock.hpp"
#include "pbsim/network.hpp"

namespace pbsim::testing {

// Brute-force reference implementations used by the acceptance checks and
// unit tests. Both enumerate every photon-to-mode assignment tuple
// explicitly instead of going through the incremental expansion the
// library uses, so they stay independent of the code paths they check.
// Exponential in photon count; fine for n <= 5.

/// Enumerates all m^n assignments of photons to modes and accumulates
/// prod_l v_l[m_l] with the sqrt(prod_m n_m!) factorial normalization.
FockState oracle_expand_product(const ProductPhotonState& p);

/// Permanent-style Fock-basis transform: expands each occupation into a
/// photon list and enumerates every assignment to output modes weighted by
/// matrix entries.
FockState oracle_fock_transform(const FockState& s, const ModeMap& u);

}  // namespace pbsim::testing

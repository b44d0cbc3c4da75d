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

#include "pbsim/testing/oracles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace pbsim::testing {

namespace {

double occupation_factorial_root(const OccupationVector& occ) {
  double f = 1.0;
  for (const auto& [mode, count] : occ.entries()) {
    for (int k = 2; k <= count; ++k) f *= k;
  }
  return std::sqrt(f);
}

/// Calls `visit` once per assignment tuple in {0..m-1}^n.
template <typename Visit>
void for_each_assignment(int n, int m, Visit visit) {
  std::vector<int> tuple(n, 0);
  while (true) {
    visit(tuple);
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
    if (pos < 0) return;
    ++tuple[pos];
  }
}

}  // namespace

FockState oracle_expand_product(const ProductPhotonState& p) {
  const int n = p.photon_count();
  const int m = static_cast<int>(p.modes.size());
  std::map<OccupationVector, Complex> acc;
  if (n == 0) {
    acc[OccupationVector{}] = p.scale;
    return FockState(0, std::move(acc));
  }
  for_each_assignment(n, m, [&](const std::vector<int>& tuple) {
    Complex amp = p.scale;
    OccupationVector occ;
    for (int l = 0; l < n; ++l) {
      amp *= p.photons[l](tuple[l]);
      occ = occ.with_added(p.modes[tuple[l]]);
    }
    if (amp != Complex{0.0, 0.0}) {
      acc[occ] += amp * occupation_factorial_root(occ);
    }
  });
  return FockState(n, std::move(acc));
}

FockState oracle_fock_transform(const FockState& s, const ModeMap& u) {
  const int m_out = static_cast<int>(u.out_modes.size());
  std::map<OccupationVector, Complex> acc;
  for (const auto& [occ_in, amp_in] : s.terms()) {
    // |occ_in> carries 1/sqrt(prod n_m!) relative to the raw operator
    // product, hence the division below.
    std::vector<int> photon_cols;
    for (const auto& [mode, count] : occ_in.entries()) {
      int col = -1;
      for (int j = 0; j < static_cast<int>(u.in_modes.size()); ++j) {
        if (u.in_modes[j] == mode) col = j;
      }
      if (col < 0) throw std::invalid_argument("mode missing from map");
      for (int k = 0; k < count; ++k) photon_cols.push_back(col);
    }
    const Complex prefactor = amp_in / occupation_factorial_root(occ_in);
    if (photon_cols.empty()) {
      acc[OccupationVector{}] += prefactor;
      continue;
    }
    for_each_assignment(
        static_cast<int>(photon_cols.size()), m_out,
        [&](const std::vector<int>& tuple) {
          Complex amp = prefactor;
          OccupationVector occ;
          for (size_t l = 0; l < photon_cols.size(); ++l) {
            amp *= u.matrix(tuple[l], photon_cols[l]);
            occ = occ.with_added(u.out_modes[tuple[l]]);
          }
          if (amp != Complex{0.0, 0.0}) {
            acc[occ] += amp * occupation_factorial_root(occ);
          }
        });
  }
  return FockState(s.photons(), std::move(acc));
}

}  // namespace pbsim::testing

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

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "pbsim/modes.hpp"

namespace pbsim {

/// Amplitudes whose magnitude falls at or below this are dropped when a
/// FockState is canonicalized. Exact rational-times-root-of-unity values
/// survive in doubles to ~1e-15, so 1e-14 separates signal from dust.
inline constexpr double kPruneTolerance = 1e-14;

/// Sparse multimode bosonic number state with a fixed total photon number.
/// Terms map canonical occupation vectors to complex amplitudes over the
/// orthonormal number basis. States may be unnormalized; post-selected
/// outputs carry their success probability as norm^2. Immutable after
/// construction.
class FockState {
 public:
  using TermMap = std::map<OccupationVector, Complex>;

  FockState() = default;

  /// Canonicalizes: prunes amplitudes at or below kPruneTolerance and
  /// rejects occupations whose total differs from `photons`.
  FockState(int photons, TermMap terms);

  int photons() const { return photons_; }
  const TermMap& terms() const { return terms_; }

  Complex amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

 private:
  int photons_ = 0;
  TermMap terms_;
};

/// A vacuum-normalized single basis ket |occ>.
FockState basis_state(const OccupationVector& occ);

/// Unexpanded product of single-photon creation operators. Photon `k` is
/// the vector photons[k] over the shared `modes` ordering; the semantic
/// value is scale * prod_k (photons[k] . a^dag) |vac>. This is the cheap
/// propagation representation: expansion to a FockState is deferred until
/// post-selection or statistics need it.
struct ProductPhotonState {
  std::vector<ModeId> modes;
  std::vector<Eigen::VectorXcd> photons;
  Complex scale{1.0, 0.0};

  int photon_count() const { return static_cast<int>(photons.size()); }
};

/// Expands the creation-operator product into the number basis, including
/// the bosonic sqrt(n!) factors. An empty photon list yields the vacuum
/// with amplitude `scale`.
FockState expand_product(const ProductPhotonState& p);

/// <a|b> over the orthonormal occupation basis; zero when the photon
/// numbers differ.
Complex inner_product(const FockState& a, const FockState& b);

double norm_sq(const FockState& a);

/// Returns the unit-norm state and the original norm^2. Throws on the
/// zero state ("empty post-selected state").
std::pair<FockState, double> normalize(const FockState& a);

/// Tensor product; requires disjoint spatial mode sets (relabel first with
/// shift_spatial otherwise).
FockState tensor(const FockState& a, const FockState& b);

FockState scaled(const FockState& a, Complex factor);

/// Relabels every spatial index by +offset (a mode relabeling for tensor).
FockState shift_spatial(const FockState& a, int offset);

/// State equality up to global phase: |<a|b>|^2 == norm2(a) * norm2(b)
/// within tol.
bool phase_equal(const FockState& a, const FockState& b, double tol = 1e-10);

/// Sorted list of spatial channels the state has support on.
std::vector<int> spatial_support(const FockState& a);

/// JSON wire format:
///   {"photons": n, "terms": [{"occ": [[spatial, "R"|"L", count], ...],
///                             "re": x, "im": y}, ...]}
/// Term order is the canonical occupation order.
std::string to_json(const FockState& a);
FockState fock_from_json(const std::string& text);

}  // namespace pbsim

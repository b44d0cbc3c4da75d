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

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbsim {

using Complex = std::complex<double>;

/// Circular polarization label. R sorts before L everywhere; the circular
/// basis is the canonical storage basis, linear bases are derived views.
enum class Pol : std::uint8_t { R = 0, L = 1 };

inline char pol_char(Pol p) { return p == Pol::R ? 'R' : 'L'; }

/// One optical mode: a spatial channel index plus a circular polarization.
/// Total order is lexicographic (spatial first, R before L).
struct ModeId {
  int spatial = 0;
  Pol pol = Pol::R;

  friend auto operator<=>(const ModeId&, const ModeId&) = default;
};

inline ModeId mode_r(int spatial) { return {spatial, Pol::R}; }
inline ModeId mode_l(int spatial) { return {spatial, Pol::L}; }

/// Photon counts per mode in canonical form: entries sorted by ModeId and
/// zero counts never stored, so equal occupations compare equal as map keys.
class OccupationVector {
 public:
  using Entry = std::pair<ModeId, int>;

  OccupationVector() = default;

  static OccupationVector of(std::initializer_list<Entry> entries) {
    OccupationVector occ;
    for (const auto& [mode, count] : entries) occ = occ.with_added(mode, count);
    return occ;
  }

  int count(ModeId mode) const {
    for (const auto& [m, c] : entries_) {
      if (m == mode) return c;
    }
    return 0;
  }

  int total() const {
    int n = 0;
    for (const auto& [m, c] : entries_) n += c;
    return n;
  }

  /// Returns a copy with `count` extra photons in `mode`.
  OccupationVector with_added(ModeId mode, int count = 1) const {
    if (count < 0) throw std::invalid_argument("negative photon count");
    OccupationVector out = *this;
    if (count == 0) return out;
    auto it = out.entries_.begin();
    while (it != out.entries_.end() && it->first < mode) ++it;
    if (it != out.entries_.end() && it->first == mode) {
      it->second += count;
    } else {
      out.entries_.insert(it, {mode, count});
    }
    return out;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::string str() const {
    std::string s = "{";
    for (const auto& [m, c] : entries_) {
      if (s.size() > 1) s += ", ";
      s += "(" + std::to_string(m.spatial) + "," + pol_char(m.pol) +
           "):" + std::to_string(c);
    }
    return s + "}";
  }

  friend auto operator<=>(const OccupationVector&,
                          const OccupationVector&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace pbsim

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

#include "pbsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace pbsim {

FockState::FockState(int photons, TermMap terms) : photons_(photons) {
  if (photons < 0) throw std::invalid_argument("negative photon number");
  for (auto& [occ, amp] : terms) {
    if (occ.total() != photons) {
      throw std::invalid_argument("occupation " + occ.str() + " has total " +
                                  std::to_string(occ.total()) +
                                  ", expected " + std::to_string(photons));
    }
    if (std::abs(amp) > kPruneTolerance) terms_.emplace(occ, amp);
  }
}

FockState basis_state(const OccupationVector& occ) {
  FockState::TermMap terms;
  terms[occ] = Complex{1.0, 0.0};
  return FockState(occ.total(), std::move(terms));
}

FockState expand_product(const ProductPhotonState& p) {
  const int m = static_cast<int>(p.modes.size());
  for (const auto& v : p.photons) {
    if (v.size() != m) {
      throw std::invalid_argument("photon vector length does not match mode list");
    }
    if (v.isZero(0.0)) {
      throw std::invalid_argument("photon vector has no nonzero entry");
    }
  }

  // One creation operator at a time: a^dag_m |..n_m..> = sqrt(n_m+1)|..n_m+1..>,
  // so each path accumulates sqrt(n_m!) per mode and every photon-to-mode
  // assignment tuple is visited exactly once.
  std::map<OccupationVector, Complex> acc;
  acc[OccupationVector{}] = p.scale;
  for (const auto& v : p.photons) {
    std::map<OccupationVector, Complex> next;
    for (const auto& [occ, amp] : acc) {
      for (int j = 0; j < m; ++j) {
        const Complex c = v(j);
        if (c == Complex{0.0, 0.0}) continue;
        const ModeId mode = p.modes[j];
        next[occ.with_added(mode)] +=
            amp * c * std::sqrt(static_cast<double>(occ.count(mode) + 1));
      }
    }
    acc = std::move(next);
  }
  return FockState(p.photon_count(), std::move(acc));
}

Complex inner_product(const FockState& a, const FockState& b) {
  if (a.photons() != b.photons()) return {0.0, 0.0};
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  const bool small_is_a = &small == &a;
  Complex sum{0.0, 0.0};
  for (const auto& [occ, amp] : small.terms()) {
    auto it = large.terms().find(occ);
    if (it == large.terms().end()) continue;
    sum += small_is_a ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return sum;
}

double norm_sq(const FockState& a) {
  double sum = 0.0;
  for (const auto& [occ, amp] : a.terms()) sum += std::norm(amp);
  return sum;
}

std::pair<FockState, double> normalize(const FockState& a) {
  const double n2 = norm_sq(a);
  if (n2 <= 0.0) throw std::runtime_error("empty post-selected state");
  const double inv = 1.0 / std::sqrt(n2);
  FockState::TermMap terms;
  for (const auto& [occ, amp] : a.terms()) terms[occ] = amp * inv;
  return {FockState(a.photons(), std::move(terms)), n2};
}

FockState tensor(const FockState& a, const FockState& b) {
  const auto sa = spatial_support(a);
  const auto sb = spatial_support(b);
  std::vector<int> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw std::invalid_argument(
        "tensor requires disjoint spatial mode sets; shared spatial " +
        std::to_string(common.front()));
  }
  FockState::TermMap terms;
  for (const auto& [oa, ca] : a.terms()) {
    for (const auto& [ob, cb] : b.terms()) {
      OccupationVector occ = oa;
      for (const auto& [mode, count] : ob.entries()) {
        occ = occ.with_added(mode, count);
      }
      terms[occ] = ca * cb;
    }
  }
  return FockState(a.photons() + b.photons(), std::move(terms));
}

FockState scaled(const FockState& a, Complex factor) {
  FockState::TermMap terms;
  for (const auto& [occ, amp] : a.terms()) terms[occ] = amp * factor;
  return FockState(a.photons(), std::move(terms));
}

FockState shift_spatial(const FockState& a, int offset) {
  FockState::TermMap terms;
  for (const auto& [occ, amp] : a.terms()) {
    OccupationVector shifted;
    for (const auto& [mode, count] : occ.entries()) {
      shifted = shifted.with_added({mode.spatial + offset, mode.pol}, count);
    }
    terms[shifted] = amp;
  }
  return FockState(a.photons(), std::move(terms));
}

bool phase_equal(const FockState& a, const FockState& b, double tol) {
  const double lhs = std::norm(inner_product(a, b));
  const double rhs = norm_sq(a) * norm_sq(b);
  return std::abs(lhs - rhs) <= tol;
}

std::vector<int> spatial_support(const FockState& a) {
  std::set<int> s;
  for (const auto& [occ, amp] : a.terms()) {
    for (const auto& [mode, count] : occ.entries()) s.insert(mode.spatial);
  }
  return {s.begin(), s.end()};
}

std::string to_json(const FockState& a) {
  nlohmann::json j;
  j["photons"] = a.photons();
  j["terms"] = nlohmann::json::array();
  for (const auto& [occ, amp] : a.terms()) {
    nlohmann::json occ_json = nlohmann::json::array();
    for (const auto& [mode, count] : occ.entries()) {
      occ_json.push_back({mode.spatial, std::string(1, pol_char(mode.pol)), count});
    }
    j["terms"].push_back(
        {{"occ", occ_json}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return j.dump();
}

FockState fock_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  FockState::TermMap terms;
  for (const auto& term : j.at("terms")) {
    OccupationVector occ;
    for (const auto& entry : term.at("occ")) {
      const int spatial = entry.at(0).get<int>();
      const std::string pol = entry.at(1).get<std::string>();
      const int count = entry.at(2).get<int>();
      if (pol != "R" && pol != "L") {
        throw std::invalid_argument("polarization must be \"R\" or \"L\"");
      }
      occ = occ.with_added({spatial, pol == "R" ? Pol::R : Pol::L}, count);
    }
    terms[occ] = Complex{term.at("re").get<double>(), term.at("im").get<double>()};
  }
  return FockState(j.at("photons").get<int>(), std::move(terms));
}

}  // namespace pbsim

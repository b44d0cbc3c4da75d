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

#include "pbsim/postselect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "pbsim/network.hpp"

namespace pbsim {

namespace {

int photons_on_ports(const OccupationVector& occ, const std::vector<int>& ports) {
  int n = 0;
  for (const auto& [mode, count] : occ.entries()) {
    if (std::find(ports.begin(), ports.end(), mode.spatial) != ports.end()) {
      n += count;
    }
  }
  return n;
}

bool satisfies(const OccupationVector& occ, const PostSelectionRule& rule) {
  for (const PortConstraint& c : rule) {
    const int n = photons_on_ports(occ, c.spatials);
    if (c.kind == DetectKind::Zero ? n != 0 : n != 1) return false;
  }
  return true;
}

}  // namespace

FockState project(const FockState& s, const PostSelectionRule& rule) {
  FockState::TermMap terms;
  for (const auto& [occ, amp] : s.terms()) {
    if (satisfies(occ, rule)) terms.emplace(occ, amp);
  }
  return FockState(s.photons(), std::move(terms));
}

std::pair<FockState, double> bottleneck_output(int n) {
  if (n < 1) throw std::invalid_argument("bottleneck_output needs n >= 1");
  const ProductPhotonState propagated =
      apply_mode_map(build_input(n), merge_cascade(n));
  PostSelectionRule rule;
  for (int port = 1; port < n; ++port) {
    rule.push_back({{port}, DetectKind::Zero});
  }
  const FockState out = rule.empty() ? expand_product(propagated)
                                     : project(expand_product(propagated), rule);
  return {out, norm_sq(out)};
}

FockState closed_form_output(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_output needs n >= 1");
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const double amp = std::sqrt(fact / std::pow(2.0 * n, n));
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;
  FockState::TermMap terms;
  terms[OccupationVector::of({{mode_r(0), n}})] = Complex{amp, 0.0};
  terms[OccupationVector::of({{mode_l(0), n}})] = Complex{sign * amp, 0.0};
  return FockState(n, std::move(terms));
}

double closed_form_probability(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_probability needs n >= 1");
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return 2.0 * fact / std::pow(2.0 * n, n);
}

std::string to_json(const PostSelectionRule& rule) {
  nlohmann::json j = nlohmann::json::array();
  for (const PortConstraint& c : rule) {
    j.push_back({{"ports", c.spatials},
                 {"kind", c.kind == DetectKind::Zero ? "zero" : "one"}});
  }
  return j.dump();
}

PostSelectionRule rule_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  PostSelectionRule rule;
  for (const auto& entry : j) {
    PortConstraint c;
    c.spatials = entry.at("ports").get<std::vector<int>>();
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "zero") {
      c.kind = DetectKind::Zero;
    } else if (kind == "one") {
      c.kind = DetectKind::ExactlyOne;
    } else {
      throw std::invalid_argument("kind must be \"zero\" or \"one\"");
    }
    rule.push_back(std::move(c));
  }
  return rule;
}

}  // namespace pbsim

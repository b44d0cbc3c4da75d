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

#include <string>
#include <vector>

namespace pbsim {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a headline number when passing
};

/// Runs the nine numeric release criteria (probability law, cat identity,
/// super-bunching, fringe law, mismatch state, mismatch universality, GHZ
/// pipeline, expansion oracle, rotation symmetry). Every tolerance is
/// pinned here. The CLI `validate` command and the acceptance suite both
/// report these results verbatim.
std::vector<CriterionResult> run_acceptance_criteria();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace pbsim

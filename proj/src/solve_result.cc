// Copyright 2026 The coopauction Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopauction/solve_result.h"

#include <array>
#include <utility>

namespace coopauction {
namespace {

constexpr std::array<std::pair<SolveStatus, std::string_view>, 5> kStatusNames =
    {{
        {SolveStatus::kOptimal, "Optimal"},
        {SolveStatus::kComplete, "Complete"},
        {SolveStatus::kStalled, "Stalled"},
        {SolveStatus::kInfeasible, "Infeasible"},
        {SolveStatus::kIterationLimit, "IterationLimit"},
    }};

}  // namespace

std::string_view SolveStatusName(SolveStatus status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "Unknown";
}

std::optional<SolveStatus> ParseSolveStatus(std::string_view name) {
  for (const auto& [s, n] : kStatusNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::string_view InfeasibilityReasonName(InfeasibilityReason reason) {
  switch (reason) {
    case InfeasibilityReason::kNone:
      return "none";
    case InfeasibilityReason::kEmptyBorder:
      return "empty_border";
    case InfeasibilityReason::kPriceGuard:
      return "price_guard";
    case InfeasibilityReason::kFeasibilityCheck:
      return "feasibility_check";
    case InfeasibilityReason::kArtificialArc:
      return "artificial_arc";
  }
  return "none";
}

Counters& Counters::operator+=(const Counters& o) {
  iterations += o.iterations;
  bids += o.bids;
  coalition_builds += o.coalition_builds;
  node_visits += o.node_visits;
  price_rises += o.price_rises;
  augmentations += o.augmentations;
  expansions += o.expansions;
  reassignments += o.reassignments;
  return *this;
}

}  // namespace coopauction

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

#ifndef COOPAUCTION_SOLVE_RESULT_H_
#define COOPAUCTION_SOLVE_RESULT_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/types.h"

namespace coopauction {

enum class SolveStatus {
  kOptimal,         // complete and provably optimal for the integer values
  kComplete,        // complete, within n * epsilon of optimal
  kStalled,         // conservative auction made no progress
  kInfeasible,      // proven or detected absence of a perfect matching
  kIterationLimit,  // max_iterations reached
};

std::string_view SolveStatusName(SolveStatus status);
std::optional<SolveStatus> ParseSolveStatus(std::string_view name);

inline bool IsComplete(SolveStatus s) {
  return s == SolveStatus::kOptimal || s == SolveStatus::kComplete;
}

// How Infeasible was established.
enum class InfeasibilityReason {
  kNone,
  kEmptyBorder,       // coalition exhausted with no border objects
  kPriceGuard,        // some price exceeded the guard threshold
  kFeasibilityCheck,  // explicit bipartite matching test
  kArtificialArc,     // solution of the padded instance used a padding arc
};

std::string_view InfeasibilityReasonName(InfeasibilityReason reason);

struct Counters {
  std::int64_t iterations = 0;
  std::int64_t bids = 0;
  std::int64_t coalition_builds = 0;
  std::int64_t node_visits = 0;  // person-object arc inspections in coalitions
  std::int64_t price_rises = 0;  // collective rises
  std::int64_t augmentations = 0;
  std::int64_t expansions = 0;
  std::int64_t reassignments = 0;

  Counters& operator+=(const Counters& other);
  friend bool operator==(const Counters&, const Counters&) = default;
};

struct PhaseSummary {
  Value eps = 0;
  int discarded_pairs = 0;
  SolveStatus status = SolveStatus::kComplete;
  Counters counters;
};

// Thrown when a driver is handed a start state that violates eps-CS.
class InitialStateViolatesEpsCs : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kComplete;
  InfeasibilityReason infeasibility = InfeasibilityReason::kNone;
  PartialAssignment assignment;
  PriceVector prices;         // in the units the algorithm ran in
  Value scale = 1;            // values were multiplied by this factor
  Value primal_value = 0;     // in original units
  Value dual_cost = 0;        // scaled units
  Value epsilon_final = 0;    // scaled units
  std::vector<Value> person_eps;  // nonempty when per-person eps was used
  Counters counters;
  std::vector<PhaseSummary> phases;
};

}  // namespace coopauction

#endif  // COOPAUCTION_SOLVE_RESULT_H_

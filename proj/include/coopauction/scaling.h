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

#ifndef COOPAUCTION_SCALING_H_
#define COOPAUCTION_SCALING_H_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/coalition.h"
#include "coopauction/driver.h"
#include "coopauction/epsilon.h"
#include "coopauction/instance.h"
#include "coopauction/solve_result.h"
#include "coopauction/trace.h"

namespace coopauction {

enum class Algorithm {
  kConservative,
  kAggressive,
  kCooperative,
  kExpanding,
  kCombined,
  kReassign,
};

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kConservative, Algorithm::kAggressive, Algorithm::kCooperative,
    Algorithm::kExpanding,    Algorithm::kCombined,   Algorithm::kReassign,
};

enum class InitialPrices {
  kZero,      // p_j = 0
  kMinValue,  // p_j = min over persons of a_ij (scaled)
  kGiven,     // SolveConfig::given_prices, in scaled units
};

struct SolveConfig {
  Algorithm algorithm = Algorithm::kCombined;

  // With scaling, values are multiplied by n + 1 and epsilon runs from
  // eps0 down to eps_final, dividing by theta each phase. Without scaling
  // a single phase runs at `eps` on the raw values.
  bool scaling = true;
  Value eps = 1;
  Value eps0 = 0;  // 0 selects max(1, (n + 1) C / 5)
  Value eps_final = 1;
  Value theta = 4;

  bool adaptive = false;
  AdaptiveRule adaptive_rule;

  InitialPrices initial_prices = InitialPrices::kZero;
  PriceVector given_prices;
  std::vector<std::pair<PersonIndex, ObjectIndex>> initial_assignment;

  bool check_feasibility = false;  // bipartite matching test first
  bool artificial_pairs = false;   // pad with heavily penalized arcs

  std::int64_t max_iterations = 0;  // per phase; 0 selects the default cap
  std::int64_t stall_window = 0;
  PersonOrder person_order = PersonOrder::kFifo;
  RemovalRule removal_rule = RemovalRule::kFifo;
  IterationHook after_iteration;
  Tracer* tracer = nullptr;
};

// Phase epsilons, from eps0 down to eps_final.
std::vector<Value> EpsilonSchedule(Value eps0, Value eps_final, Value theta);

// Default first-phase epsilon: max(1, scaled_range / 5).
Value DefaultEps0(Value scaled_range);

PriceVector MinValuePrices(const Instance& inst);

// Drops the pairs that violate eps-CS at `eps`. Survivors are untouched.
PartialAssignment RescaleAssignment(
    const Instance& inst, const PriceVector& prices, const PartialAssignment& asg,
    EpsilonView eps,
    std::vector<std::pair<PersonIndex, ObjectIndex>>* discarded = nullptr);

// True iff a perfect matching exists (augmenting-path bipartite matching on
// the unweighted graph).
bool FeasibilityCheck(const Instance& inst);

// (2n + 1)(C + 1).
Value DefaultArtificialPenalty(const Instance& inst);

// Adds arc (i, i) with value -penalty for every person lacking it.
Instance AddArtificialPairs(const Instance& inst, std::optional<Value> penalty = {});

// True when `asg` uses an arc that `original` does not have.
bool UsesArtificialArc(const Instance& original, const PartialAssignment& asg);

// Runs the configured algorithm, with or without scaling. The result holds
// prices and dual cost in scaled units and the primal value in original
// units. Throws InitialStateViolatesEpsCs and std::invalid_argument.
SolveResult Solve(const Instance& inst, const SolveConfig& config);

}  // namespace coopauction

#endif  // COOPAUCTION_SCALING_H_

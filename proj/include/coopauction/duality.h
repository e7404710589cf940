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

#ifndef COOPAUCTION_DUALITY_H_
#define COOPAUCTION_DUALITY_H_

#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/epsilon.h"
#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction {

struct ProfitResult {
  Value profit;                     // max_j (a_ij - p_j)
  std::vector<ObjectIndex> argmax;  // every maximizer, ascending
};

ProfitResult Profit(const Instance& inst, const PriceVector& prices,
                    PersonIndex i);

// Just the maximum profit, without collecting maximizers.
Value MaxProfit(const Instance& inst, const PriceVector& prices, PersonIndex i);

// Sum of a_ij over the assigned pairs.
Value PrimalValue(const Instance& inst, const PartialAssignment& asg);

// Sum over persons of their max profit plus the sum of all prices.
Value DualCost(const Instance& inst, const PriceVector& prices);

struct EpsCsViolation {
  PersonIndex person;
  ObjectIndex object;
  Value deficit;  // (pi_i - eps) - (a_ij - p_j) > 0

  friend bool operator==(const EpsCsViolation&, const EpsCsViolation&) = default;
};

struct EpsCsReport {
  std::vector<EpsCsViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks a_ij - p_j >= pi_i - eps_i for every assigned pair. eps = 0 checks
// exact complementary slackness.
EpsCsReport CheckEpsCs(const Instance& inst, const PriceVector& prices,
                       const PartialAssignment& asg, EpsilonView eps);

// Dual cost minus primal value; non-negative by weak duality. Throws
// AssignmentError when the assignment is not complete.
Value DualityGap(const Instance& inst, const PriceVector& prices,
                 const PartialAssignment& asg);

}  // namespace coopauction

#endif  // COOPAUCTION_DUALITY_H_

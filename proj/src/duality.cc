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

#include "coopauction/duality.h"

#include <limits>

namespace coopauction {

ProfitResult Profit(const Instance& inst, const PriceVector& prices,
                    PersonIndex i) {
  ProfitResult result{std::numeric_limits<Value>::min(), {}};
  for (const Arc& arc : inst.arcs(i)) {
    const Value profit = arc.value - prices[arc.object];
    if (profit > result.profit) {
      result.profit = profit;
      result.argmax.clear();
    }
    if (profit == result.profit) result.argmax.push_back(arc.object);
  }
  return result;
}

Value MaxProfit(const Instance& inst, const PriceVector& prices,
                PersonIndex i) {
  Value best = std::numeric_limits<Value>::min();
  for (const Arc& arc : inst.arcs(i)) {
    best = std::max(best, arc.value - prices[arc.object]);
  }
  return best;
}

Value PrimalValue(const Instance& inst, const PartialAssignment& asg) {
  Value total = 0;
  for (PersonIndex i = 0; i < asg.size(); ++i) {
    const ObjectIndex j = asg.object_or_none(i);
    if (j != kNoObject) total += *inst.value(i, j);
  }
  return total;
}

Value DualCost(const Instance& inst, const PriceVector& prices) {
  Value total = 0;
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    total += MaxProfit(inst, prices, i);
  }
  for (const Value p : prices) total += p;
  return total;
}

EpsCsReport CheckEpsCs(const Instance& inst, const PriceVector& prices,
                       const PartialAssignment& asg, EpsilonView eps) {
  EpsCsReport report;
  for (PersonIndex i = 0; i < asg.size(); ++i) {
    const ObjectIndex j = asg.object_or_none(i);
    if (j == kNoObject) continue;
    const std::optional<Value> a = inst.value(i, j);
    if (!a) {
      report.violations.push_back({i, j, kInfinity});
      continue;
    }
    const Value slack = (*a - prices[j]) - (MaxProfit(inst, prices, i) - eps(i));
    if (slack < 0) report.violations.push_back({i, j, -slack});
  }
  return report;
}

Value DualityGap(const Instance& inst, const PriceVector& prices,
                 const PartialAssignment& asg) {
  if (!asg.complete()) {
    throw AssignmentError("duality gap requires a complete assignment");
  }
  return DualCost(inst, prices) - PrimalValue(inst, asg);
}

}  // namespace coopauction

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

#include "coopauction/driver.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "coopauction/duality.h"
#include "coopauction/solve_result.h"

namespace coopauction {

Value ValueRange(const Instance& inst) {
  Value range = 0;
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    for (const Arc& arc : inst.arcs(i)) range = std::max(range, std::abs(arc.value));
  }
  return range;
}

std::int64_t DefaultIterationCap(int n, Value range, Value eps) {
  return 10 * static_cast<std::int64_t>(n) * (range + 1) / std::max<Value>(eps, 1) +
         10 * static_cast<std::int64_t>(n);
}

std::vector<Value> PriceCeiling(const PriceVector& p0, Value range, Value eps) {
  const Value n = static_cast<Value>(p0.size());
  Value spread = 0;
  if (!p0.empty()) {
    const auto [lo, hi] = std::minmax_element(p0.begin(), p0.end());
    spread = *hi - *lo;
  }
  std::vector<Value> ceiling(p0.size());
  for (std::size_t j = 0; j < p0.size(); ++j) {
    ceiling[j] = p0[j] + spread + (2 * n - 1) * (range + eps) + 1;
  }
  return ceiling;
}

void CheckStartState(const Instance& inst, const PriceVector& prices,
                     const PartialAssignment& asg, EpsilonView eps) {
  if (static_cast<int>(prices.size()) != inst.size() || asg.size() != inst.size()) {
    throw InitialStateViolatesEpsCs("start state size does not match instance");
  }
  const EpsCsReport report = CheckEpsCs(inst, prices, asg, eps);
  if (!report.ok()) {
    const EpsCsViolation& v = report.violations.front();
    throw InitialStateViolatesEpsCs(
        "start state violates eps-CS at pair (" + std::to_string(v.person + 1) +
        "," + std::to_string(v.object + 1) + ")");
  }
}

PersonQueue::PersonQueue(PersonOrder order, const PartialAssignment& asg)
    : order_(order) {
  for (PersonIndex i = 0; i < asg.size(); ++i) {
    if (asg.object_or_none(i) == kNoObject) Push(i);
  }
}

PersonIndex PersonQueue::Pop() {
  PersonIndex i;
  if (order_ == PersonOrder::kFifo) {
    i = fifo_.front();
    fifo_.pop_front();
  } else {
    i = *ordered_.begin();
    ordered_.erase(ordered_.begin());
  }
  return i;
}

void PersonQueue::Push(PersonIndex i) {
  if (order_ == PersonOrder::kFifo) {
    fifo_.push_back(i);
  } else {
    ordered_.insert(i);
  }
}

}  // namespace coopauction

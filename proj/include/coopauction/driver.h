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

#ifndef COOPAUCTION_DRIVER_H_
#define COOPAUCTION_DRIVER_H_

#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/auction_state.h"
#include "coopauction/epsilon.h"
#include "coopauction/instance.h"
#include "coopauction/trace.h"
#include "coopauction/types.h"

namespace coopauction {

enum class PersonOrder {
  kFifo,         // queue; displaced persons go to the tail
  kLowestIndex,  // always the lowest-index unassigned person
};

// Called after every iteration with the current state and the epsilon each
// person is held to. Tests use it to check eps-CS step by step.
using IterationHook = std::function<void(const AuctionState&, EpsilonView)>;

// Settings shared by the single-person and the cooperative drivers.
struct AuctionConfig {
  Value eps = 1;
  PersonOrder person_order = PersonOrder::kFifo;
  std::int64_t stall_window = 0;    // 0 selects n * n
  std::int64_t max_iterations = 0;  // 0 selects DefaultIterationCap
  bool price_guard = true;

  // Person-dependent epsilon for single-person aggressive bids.
  bool adaptive = false;
  AdaptiveRule adaptive_rule;

  // Emit a start record before the first iteration. The scaling driver turns
  // this off after its first phase.
  bool trace_start = true;

  IterationHook after_iteration;
  Tracer* tracer = nullptr;
};

// C = max |a_ij| over all arcs.
Value ValueRange(const Instance& inst);

// 10 n (C + 1) / max(eps, 1) + 10 n.
std::int64_t DefaultIterationCap(int n, Value range, Value eps);

// Per-object thresholds above which a price proves that bidding would never
// end: p0_j + spread(p0) + (2n - 1)(C + eps) + 1.
std::vector<Value> PriceCeiling(const PriceVector& p0, Value range, Value eps);

// Throws InitialStateViolatesEpsCs when (p, asg) is not eps-CS or the sizes
// do not match the instance.
void CheckStartState(const Instance& inst, const PriceVector& prices,
                     const PartialAssignment& asg, EpsilonView eps);

// Unassigned persons waiting for an iteration.
class PersonQueue {
 public:
  PersonQueue(PersonOrder order, const PartialAssignment& asg);

  bool empty() const {
    return order_ == PersonOrder::kFifo ? fifo_.empty() : ordered_.empty();
  }
  PersonIndex Pop();
  void Push(PersonIndex i);

 private:
  PersonOrder order_;
  std::deque<PersonIndex> fifo_;
  std::set<PersonIndex> ordered_;
};

}  // namespace coopauction

#endif  // COOPAUCTION_DRIVER_H_

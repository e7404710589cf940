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

#ifndef COOPAUCTION_NONCOOP_AUCTION_H_
#define COOPAUCTION_NONCOOP_AUCTION_H_

#include "coopauction/auction_state.h"
#include "coopauction/driver.h"
#include "coopauction/instance.h"
#include "coopauction/solve_result.h"
#include "coopauction/types.h"

namespace coopauction {

struct BidComputation {
  PersonIndex person = kNoPerson;
  ObjectIndex best_object = kNoObject;  // lowest-index maximizer
  Value best_profit = 0;
  Value second_profit = 0;  // best profit over the other admissible objects
  Value new_price = 0;
  Value increment = 0;
  PersonIndex displaced = kNoPerson;
};

// Best object, best profit and second best profit of person i. Leaves the
// price fields zero.
BidComputation BestAndSecond(const Instance& inst, const PriceVector& prices,
                             PersonIndex i);

// Sets p_j = a_ij - w_i on the best object and assigns i to it.
BidComputation ConservativeBid(const Instance& inst, AuctionState& state,
                               PersonIndex i);

// Sets p_j = a_ij - w_i + eps on the best object and assigns i to it.
BidComputation AggressiveBid(const Instance& inst, AuctionState& state,
                             PersonIndex i, Value eps);

// Single-person auction: conservative when config.eps == 0, aggressive
// otherwise. Returns Complete, Stalled (eps == 0 only), Infeasible (price
// guard) or IterationLimit. Throws InitialStateViolatesEpsCs.
SolveResult RunNoncoop(const Instance& inst, const AuctionConfig& config,
                       PriceVector p0, PartialAssignment asg0);

}  // namespace coopauction

#endif  // COOPAUCTION_NONCOOP_AUCTION_H_

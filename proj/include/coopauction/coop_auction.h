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

#ifndef COOPAUCTION_COOP_AUCTION_H_
#define COOPAUCTION_COOP_AUCTION_H_

#include <string_view>
#include <optional>

#include "coopauction/auction_state.h"
#include "coopauction/coalition.h"
#include "coopauction/driver.h"
#include "coopauction/epsilon.h"
#include "coopauction/instance.h"
#include "coopauction/solve_result.h"
#include "coopauction/trace.h"

namespace coopauction {

enum class CoopVariant {
  kPurely,     // rebuild the coalition every iteration
  kExpanding,  // keep the coalition across rises until an augmentation
  kCombined,   // single-person bid when the root's zone is one object
  kReassign,   // collective bid that may displace an outside person
};

std::string_view CoopVariantName(CoopVariant variant);

struct CoopConfig : AuctionConfig {
  CoopVariant variant = CoopVariant::kPurely;
  RemovalRule removal_rule = RemovalRule::kFifo;
  // Coalition iterations of the combined variant expand in place.
  bool combined_expanding = true;
};

enum class IterationKind {
  kBid,          // single-person bid
  kAugmented,    // augmentation, cardinality +1
  kRaised,       // collective rise only; root still unassigned
  kReassigned,   // collective bid displaced an outside person
  kInfeasible,   // coalition blocked with an empty border
};

struct IterationOutcome {
  IterationKind kind = IterationKind::kAugmented;
  PersonIndex displaced = kNoPerson;  // person left unassigned, if any
};

struct IterationContext {
  Counters* counters = nullptr;
  Tracer* tracer = nullptr;  // used while the state is journaling
  RemovalRule removal_rule = RemovalRule::kFifo;
};

// Build the coalition of i; augment (raising the last object) or raise the
// coalition objects once.
IterationOutcome CooperativeIteration(const Instance& inst, AuctionState& state,
                                      PersonIndex i, EpsilonView eps,
                                      IterationContext& ctx);

// Build the coalition of i and keep rising and absorbing new objects until
// an augmenting path appears, then augment. One call assigns i.
IterationOutcome ExpandingIteration(const Instance& inst, AuctionState& state,
                                    PersonIndex i, EpsilonView eps,
                                    IterationContext& ctx);

// Single-person bid when the zone of i is one object (aggressive, or
// conservative at eps 0); otherwise a cooperative iteration.
IterationOutcome CombinedIteration(const Instance& inst, AuctionState& state,
                                   PersonIndex i, EpsilonView eps,
                                   bool expanding, IterationContext& ctx);

// Like CombinedIteration, but a blocked coalition bids collectively for one
// entering object: members shift along the alternating path and the outside
// holder of that object is displaced.
IterationOutcome ReassignmentIteration(const Instance& inst, AuctionState& state,
                                       PersonIndex i, EpsilonView eps,
                                       IterationContext& ctx);

// Cooperative driver. Returns Complete, Infeasible (empty border or price
// guard), Stalled or IterationLimit. Throws InitialStateViolatesEpsCs.
SolveResult RunCoop(const Instance& inst, const CoopConfig& config,
                    PriceVector p0, PartialAssignment asg0);

}  // namespace coopauction

#endif  // COOPAUCTION_COOP_AUCTION_H_

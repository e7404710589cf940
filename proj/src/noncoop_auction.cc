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

#include "coopauction/noncoop_auction.h"

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coopauction/duality.h"
#include "coopauction/epsilon.h"

namespace coopauction {
namespace {

BidComputation ApplyBid(AuctionState& state, BidComputation bid) {
  const Value old_price = state.price(bid.best_object);
  state.SetPrice(bid.best_object, bid.new_price);
  bid.increment = bid.new_price - old_price;
  bid.displaced = state.Assign(bid.person, bid.best_object);
  return bid;
}

}  // namespace

BidComputation BestAndSecond(const Instance& inst, const PriceVector& prices,
                             PersonIndex i) {
  BidComputation bid;
  bid.person = i;
  bid.best_profit = std::numeric_limits<Value>::min();
  bid.second_profit = -kInfinity;
  for (const Arc& arc : inst.arcs(i)) {
    const Value profit = arc.value - prices[arc.object];
    if (profit > bid.best_profit) {
      if (bid.best_object != kNoObject) bid.second_profit = bid.best_profit;
      bid.best_profit = profit;
      bid.best_object = arc.object;
    } else if (profit > bid.second_profit) {
      bid.second_profit = profit;
    }
  }
  return bid;
}

BidComputation ConservativeBid(const Instance& inst, AuctionState& state,
                               PersonIndex i) {
  BidComputation bid = BestAndSecond(inst, state.prices(), i);
  bid.new_price = *inst.value(i, bid.best_object) - bid.second_profit;
  return ApplyBid(state, bid);
}

BidComputation AggressiveBid(const Instance& inst, AuctionState& state,
                             PersonIndex i, Value eps) {
  BidComputation bid = BestAndSecond(inst, state.prices(), i);
  bid.new_price = *inst.value(i, bid.best_object) - bid.second_profit + eps;
  return ApplyBid(state, bid);
}

SolveResult RunNoncoop(const Instance& inst, const AuctionConfig& config,
                       PriceVector p0, PartialAssignment asg0) {
  const int n = inst.size();
  const Value eps = config.eps;
  if (eps < 0) throw std::invalid_argument("epsilon must be non-negative");
  CheckStartState(inst, p0, asg0, eps);

  const bool adaptive = config.adaptive && eps > 0;
  PersonEpsilon person_eps(n, eps);
  std::vector<char> has_bid(n, 0);

  const Value range = ValueRange(inst);
  AuctionState state(std::move(p0), std::move(asg0));
  if (config.price_guard) {
    const Value top_eps = adaptive ? std::max(eps, config.adaptive_rule.cap) : eps;
    state.set_price_ceiling(PriceCeiling(state.prices(), range, top_eps));
  }
  Tracer* tracer = config.tracer;
  if (tracer != nullptr && tracer->enabled()) {
    state.set_journaling(true);
    tracer->set_phase_eps(eps);
    if (config.trace_start) tracer->Emit(StartRecord(state));
  }

  const std::int64_t cap = config.max_iterations > 0
                               ? config.max_iterations
                               : DefaultIterationCap(n, range, eps);
  const std::int64_t stall_window =
      config.stall_window > 0 ? config.stall_window
                              : static_cast<std::int64_t>(n) * n;

  SolveResult result;
  result.epsilon_final = eps;
  PersonQueue queue(config.person_order, state.assignment());
  std::int64_t idle = 0;
  SolveStatus status = SolveStatus::kComplete;
  while (!queue.empty()) {
    if (result.counters.iterations >= cap) {
      status = SolveStatus::kIterationLimit;
      break;
    }
    const PersonIndex i = queue.Pop();
    const long long changes_before = state.price_changes();
    const int cardinality_before = state.assignment().cardinality();

    BidComputation bid;
    if (eps == 0) {
      bid = ConservativeBid(inst, state, i);
    } else {
      bid = AggressiveBid(inst, state, i, person_eps[i]);
      if (adaptive) {
        if (has_bid[i]) AdaptiveUpdate(person_eps, i, config.adaptive_rule);
        has_bid[i] = 1;
      }
    }
    if (bid.displaced != kNoPerson) queue.Push(bid.displaced);
    ++result.counters.iterations;
    ++result.counters.bids;

    if (state.journaling()) {
      TraceRecord record;
      record.event = TraceEvent::kBid;
      record.person = i;
      record.object = bid.best_object;
      record.increment = bid.increment;
      state.DrainJournal(record);
      tracer->Emit(std::move(record));
    }
    if (config.after_iteration) {
      config.after_iteration(state, adaptive ? person_eps.view() : EpsilonView(eps));
    }
    if (state.ceiling_breached()) {
      status = SolveStatus::kInfeasible;
      result.infeasibility = InfeasibilityReason::kPriceGuard;
      break;
    }
    if (eps == 0) {
      const bool progress = state.price_changes() != changes_before ||
                            state.assignment().cardinality() != cardinality_before;
      idle = progress ? 0 : idle + 1;
      if (idle >= stall_window) {
        status = SolveStatus::kStalled;
        break;
      }
    }
  }

  result.status = status;
  if (adaptive) {
    result.person_eps.assign(person_eps.values().begin(), person_eps.values().end());
    result.epsilon_final = person_eps.max();
  }
  result.primal_value = PrimalValue(inst, state.assignment());
  result.dual_cost = DualCost(inst, state.prices());
  result.prices = std::move(state).TakePrices();
  result.assignment = std::move(state).TakeAssignment();
  return result;
}

}  // namespace coopauction

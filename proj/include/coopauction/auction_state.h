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

#ifndef COOPAUCTION_AUCTION_STATE_H_
#define COOPAUCTION_AUCTION_STATE_H_

#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/trace.h"
#include "coopauction/types.h"

namespace coopauction {

// Prices and assignment of a running auction. Every mutation goes through
// this class so that it can be journaled for traces and checked against the
// price ceiling used to detect infeasibility.
class AuctionState {
 public:
  AuctionState(PriceVector prices, PartialAssignment assignment);

  int size() const { return static_cast<int>(prices_.size()); }
  const PriceVector& prices() const { return prices_; }
  Value price(ObjectIndex j) const { return prices_[j]; }
  const PartialAssignment& assignment() const { return assignment_; }

  void SetPrice(ObjectIndex j, Value price);
  void AddToPrice(ObjectIndex j, Value delta) { SetPrice(j, prices_[j] + delta); }
  // Returns the person displaced from j, or kNoPerson.
  PersonIndex Assign(PersonIndex i, ObjectIndex j);
  void Unassign(PersonIndex i);

  void set_journaling(bool on) { journaling_ = on; }
  bool journaling() const { return journaling_; }
  // Moves the changes recorded since the last call into `record`.
  void DrainJournal(TraceRecord& record);

  // True once any price moved above its ceiling. An empty ceiling disables
  // the check.
  void set_price_ceiling(std::vector<Value> ceiling) {
    ceiling_ = std::move(ceiling);
  }
  bool ceiling_breached() const { return ceiling_breached_; }

  // Bumped on every price change; drivers compare snapshots to detect
  // iterations that made no progress.
  long long price_changes() const { return price_changes_; }

  PriceVector TakePrices() && { return std::move(prices_); }
  PartialAssignment TakeAssignment() && { return std::move(assignment_); }

 private:
  PriceVector prices_;
  PartialAssignment assignment_;
  std::vector<Value> ceiling_;
  bool ceiling_breached_ = false;
  long long price_changes_ = 0;
  bool journaling_ = false;
  std::vector<PriceChange> price_journal_;
  std::vector<AssignmentChange> assign_journal_;
};

// Start record carrying the full state, so a trace can be replayed alone.
TraceRecord StartRecord(const AuctionState& state);

}  // namespace coopauction

#endif  // COOPAUCTION_AUCTION_STATE_H_

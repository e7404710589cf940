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

#include "coopauction/auction_state.h"

#include <utility>

namespace coopauction {

AuctionState::AuctionState(PriceVector prices, PartialAssignment assignment)
    : prices_(std::move(prices)), assignment_(std::move(assignment)) {}

void AuctionState::SetPrice(ObjectIndex j, Value price) {
  if (prices_[j] == price) return;
  prices_[j] = price;
  ++price_changes_;
  if (!ceiling_.empty() && price > ceiling_[j]) ceiling_breached_ = true;
  if (journaling_) price_journal_.push_back({j, price});
}

PersonIndex AuctionState::Assign(PersonIndex i, ObjectIndex j) {
  if (journaling_) assign_journal_.push_back({i, j});
  return assignment_.Assign(i, j);
}

void AuctionState::Unassign(PersonIndex i) {
  if (assignment_.object_or_none(i) == kNoObject) return;
  if (journaling_) assign_journal_.push_back({i, kNoObject});
  assignment_.Unassign(i);
}

void AuctionState::DrainJournal(TraceRecord& record) {
  record.prices = std::move(price_journal_);
  record.assignment = std::move(assign_journal_);
  price_journal_.clear();
  assign_journal_.clear();
  record.cardinality = assignment_.cardinality();
}

TraceRecord StartRecord(const AuctionState& state) {
  TraceRecord record;
  record.event = TraceEvent::kStart;
  record.n = state.size();
  for (ObjectIndex j = 0; j < state.size(); ++j) {
    if (state.price(j) != 0) record.prices.push_back({j, state.price(j)});
  }
  for (const auto& [i, j] : state.assignment().Pairs()) {
    record.assignment.push_back({i, j});
  }
  record.cardinality = state.assignment().cardinality();
  return record;
}

}  // namespace coopauction

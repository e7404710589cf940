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

#include "coopauction/coalition.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <string>

namespace coopauction {
namespace {

constexpr Value kMinusInfinity = -kInfinity;

template <typename Entry>
void HeapPush(std::vector<Entry>& heap, Entry entry) {
  heap.push_back(entry);
  std::push_heap(heap.begin(), heap.end(), std::greater<>());
}

template <typename Entry>
void HeapPop(std::vector<Entry>& heap) {
  std::pop_heap(heap.begin(), heap.end(), std::greater<>());
  heap.pop_back();
}

Value BestProfit(const Instance& inst, const PriceVector& prices, PersonIndex i) {
  Value best = std::numeric_limits<Value>::min();
  for (const Arc& arc : inst.arcs(i)) {
    best = std::max(best, arc.value - prices[arc.object]);
  }
  return best;
}

bool InZone(const Instance& inst, const PriceVector& prices, PersonIndex i,
            ObjectIndex j, Value eps) {
  const std::optional<Value> a = inst.value(i, j);
  return a && *a - prices[j] >= BestProfit(inst, prices, i) - eps;
}

}  // namespace

std::vector<ObjectIndex> EpsZone(const Instance& inst, const PriceVector& prices,
                                 PersonIndex i, Value eps) {
  const Value threshold = BestProfit(inst, prices, i) - eps;
  std::vector<ObjectIndex> zone;
  for (const Arc& arc : inst.arcs(i)) {
    if (arc.value - prices[arc.object] >= threshold) zone.push_back(arc.object);
  }
  return zone;
}

void Augment(const Instance& inst, AuctionState& state,
             const AlternatingPath& path, EpsilonView eps) {
  const auto& persons = path.persons;
  const auto& objects = path.objects;
  if (persons.empty() || persons.size() != objects.size()) {
    throw InvalidPath("path needs one object per person");
  }
  const PartialAssignment& asg = state.assignment();
  if (asg.object_or_none(persons.front()) != kNoObject) {
    throw InvalidPath("path must start at an unassigned person");
  }
  if (asg.holder_or_none(objects.back()) != kNoPerson) {
    throw InvalidPath("augmenting path must end at an unassigned object");
  }
  for (std::size_t m = 0; m < persons.size(); ++m) {
    if (m > 0 && asg.holder_or_none(objects[m - 1]) != persons[m]) {
      throw InvalidPath("person " + std::to_string(persons[m] + 1) +
                        " does not hold object " + std::to_string(objects[m - 1] + 1));
    }
    if (!InZone(inst, state.prices(), persons[m], objects[m], eps(persons[m]))) {
      throw InvalidPath("object " + std::to_string(objects[m] + 1) +
                        " is not in the zone of person " +
                        std::to_string(persons[m] + 1));
    }
  }
  for (std::size_t m = 0; m < persons.size(); ++m) {
    state.Assign(persons[m], objects[m]);
  }
}

Value MaxCsPrice(const Instance& inst, const PriceVector& prices, PersonIndex i,
                 ObjectIndex j, Value eps) {
  Value second = kMinusInfinity;
  Value a = 0;
  for (const Arc& arc : inst.arcs(i)) {
    if (arc.object == j) {
      a = arc.value;
    } else {
      second = std::max(second, arc.value - prices[arc.object]);
    }
  }
  return a - second + eps;
}

Value AugmentAndRaise(const Instance& inst, AuctionState& state,
                      const AlternatingPath& path, EpsilonView eps) {
  Augment(inst, state, path, eps);
  const PersonIndex last = path.persons.back();
  const ObjectIndex j = path.objects.back();
  const Value target = MaxCsPrice(inst, state.prices(), last, j, eps(last));
  const Value increment = std::max<Value>(0, target - state.price(j));
  state.AddToPrice(j, increment);
  return increment;
}

void ApplyPriceRise(AuctionState& state, const std::vector<ObjectIndex>& objects,
                    Value r) {
  for (const ObjectIndex j : objects) state.AddToPrice(j, r);
}

Value CoalitionRiseDirect(const Instance& inst, const PriceVector& prices,
                          const std::vector<PersonIndex>& members,
                          const std::vector<ObjectIndex>& objects,
                          EpsilonView eps) {
  std::vector<char> in_objects(inst.size(), 0);
  for (const ObjectIndex j : objects) in_objects[j] = 1;
  Value rise = kInfinity;
  for (const PersonIndex i : members) {
    const Value best = BestProfit(inst, prices, i);
    Value zone_min = best;
    Value outside_max = kMinusInfinity;
    for (const Arc& arc : inst.arcs(i)) {
      const Value profit = arc.value - prices[arc.object];
      if (profit >= best - eps(i)) zone_min = std::min(zone_min, profit);
      if (!in_objects[arc.object]) outside_max = std::max(outside_max, profit);
    }
    if (outside_max == kMinusInfinity) continue;
    rise = std::min(rise, eps(i) + zone_min - outside_max);
  }
  return rise;
}

Coalition::Coalition(const Instance& inst, AuctionState& state, PersonIndex root,
                     EpsilonView eps, RemovalRule rule, std::int64_t* node_visits)
    : inst_(inst),
      state_(state),
      eps_(eps),
      rule_(rule),
      node_visits_(node_visits),
      root_(root),
      member_rank_(inst.size(), -1),
      queued_(inst.size(), 0),
      pred_(inst.size()),
      pi_hat_(inst.size(), 0),
      scan_rise_(inst.size(), 0),
      in_objects_(inst.size(), 0),
      join_rise_(inst.size(), 0) {
  if (state.assignment().object_or_none(root) != kNoObject) {
    throw std::invalid_argument("coalition root must be unassigned");
  }
  Enqueue(root, {});
}

void Coalition::Enqueue(PersonIndex i, Link via) {
  queued_[i] = 1;
  pred_[i] = via;
  pending_.push_back(i);
}

void Coalition::TakeObject(ObjectIndex j) {
  in_objects_[j] = 1;
  join_rise_[j] = rise_total_;
  objects_.push_back(j);
}

bool Coalition::Scan(PersonIndex i, std::vector<EnteringObject>* entering) {
  const auto arcs = inst_.arcs(i);
  if (node_visits_ != nullptr) *node_visits_ += static_cast<std::int64_t>(arcs.size());
  const Value eps = eps_(i);

  Value best = std::numeric_limits<Value>::min();
  for (const Arc& arc : arcs) best = std::max(best, arc.value - price(arc.object));
  const Value threshold = best - eps;
  Value zone_min = best;
  for (const Arc& arc : arcs) {
    const Value profit = arc.value - price(arc.object);
    if (profit >= threshold) zone_min = std::min(zone_min, profit);
  }
  pi_hat_[i] = zone_min;
  scan_rise_[i] = rise_total_;

  Value outside_max = kMinusInfinity;
  for (const Arc& arc : arcs) {
    const ObjectIndex j = arc.object;
    if (in_objects_[j]) continue;
    const Value profit = arc.value - price(j);
    if (profit >= threshold) {
      const PersonIndex holder = state_.assignment().holder_or_none(j);
      if (entering != nullptr) {
        entering->push_back({j, i, holder});
      } else if (holder == kNoPerson) {
        path_ = PathTo(i, j);
        outcome_ = CoalitionOutcome::kAugmentingPath;
        return true;
      } else {
        TakeObject(j);
        Enqueue(holder, {i, j});
      }
    } else {
      HeapPush(rise_keys_, HeapEntry{eps + zone_min - profit + rise_total_, j});
      outside_max = std::max(outside_max, profit);
    }
  }
  if (outside_max != kMinusInfinity) {
    HeapPush(person_keys_, HeapEntry{best - outside_max - eps + rise_total_, i});
  }
  return false;
}

void Coalition::ComputeRise() {
  while (!rise_keys_.empty() && in_objects_[rise_keys_.front().index]) {
    HeapPop(rise_keys_);
  }
  if (rise_keys_.empty()) {
    outcome_ = CoalitionOutcome::kEmptyBorder;
    rise_ = 0;
    return;
  }
  outcome_ = CoalitionOutcome::kBlocked;
  rise_ = rise_keys_.front().key - rise_total_;
}

CoalitionOutcome Coalition::Grow() {
  while (!pending_.empty()) {
    PersonIndex i;
    if (rule_ == RemovalRule::kFifo) {
      i = pending_.front();
      pending_.pop_front();
    } else {
      i = pending_.back();
      pending_.pop_back();
    }
    member_rank_[i] = static_cast<int>(members_.size());
    members_.push_back(i);
    if (Scan(i, nullptr)) return outcome_;
  }
  ComputeRise();
  return outcome_;
}

void Coalition::Raise(Value r) {
  rise_total_ += r;
  outcome_ = CoalitionOutcome::kGrowing;
}

std::vector<EnteringObject> Coalition::EnteringObjects() {
  std::vector<PersonIndex> due;
  while (!person_keys_.empty() && person_keys_.front().key <= rise_total_) {
    due.push_back(person_keys_.front().index);
    HeapPop(person_keys_);
  }
  std::sort(due.begin(), due.end(), [this](PersonIndex a, PersonIndex b) {
    return member_rank_[a] < member_rank_[b];
  });
  due.erase(std::unique(due.begin(), due.end()), due.end());

  std::vector<EnteringObject> found;
  for (const PersonIndex i : due) Scan(i, &found);
  // Keep the earliest receiver of each object.
  std::stable_sort(found.begin(), found.end(),
                   [](const EnteringObject& a, const EnteringObject& b) {
                     return a.object < b.object;
                   });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const EnteringObject& a, const EnteringObject& b) {
                            return a.object == b.object;
                          }),
              found.end());
  return found;
}

void Coalition::Absorb(const std::vector<EnteringObject>& entering) {
  for (const EnteringObject& e : entering) {
    if (e.holder == kNoPerson || in_objects_[e.object]) continue;
    TakeObject(e.object);
    Enqueue(e.holder, {e.receiver, e.object});
  }
}

AlternatingPath Coalition::PathTo(PersonIndex person, ObjectIndex object) const {
  AlternatingPath path;
  path.persons.push_back(person);
  path.objects.push_back(object);
  PersonIndex current = person;
  while (current != root_) {
    const Link& link = pred_[current];
    path.persons.push_back(link.person);
    path.objects.push_back(link.object);
    current = link.person;
  }
  std::reverse(path.persons.begin(), path.persons.end());
  std::reverse(path.objects.begin(), path.objects.end());
  return path;
}

void Coalition::Materialize() {
  for (const ObjectIndex j : objects_) {
    const Value p = price(j);
    join_rise_[j] = rise_total_;
    state_.SetPrice(j, p);
  }
}

CoalitionSnapshot Coalition::Snapshot() const {
  CoalitionSnapshot snap;
  snap.outcome = outcome_;
  snap.members = members_;
  std::sort(snap.members.begin(), snap.members.end());
  snap.objects = objects_;
  std::sort(snap.objects.begin(), snap.objects.end());
  std::map<ObjectIndex, Value> border;
  for (const HeapEntry& e : rise_keys_) {
    if (in_objects_[e.index]) continue;
    auto [it, inserted] = border.try_emplace(e.index, e.key);
    if (!inserted) it->second = std::min(it->second, e.key);
  }
  for (const auto& [j, key] : border) {
    snap.border.push_back(j);
    snap.profit_loss.push_back(key - rise_total_ - eps_(root_));
  }
  if (outcome_ == CoalitionOutcome::kBlocked) snap.rise = rise_;
  if (outcome_ == CoalitionOutcome::kAugmentingPath) snap.path = path_;
  return snap;
}

}  // namespace coopauction

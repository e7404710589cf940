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

#ifndef COOPAUCTION_COALITION_H_
#define COOPAUCTION_COALITION_H_

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "coopauction/auction_state.h"
#include "coopauction/epsilon.h"
#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction {

// Objects j of person i with a_ij - p_j >= pi_i - eps, ascending.
std::vector<ObjectIndex> EpsZone(const Instance& inst, const PriceVector& prices,
                                 PersonIndex i, Value eps);

// Order in which discovered persons are processed.
enum class RemovalRule { kFifo, kLifo };

// persons[0] is the unassigned root; persons[m] receives objects[m]. For
// m > 0, persons[m] currently holds objects[m - 1]. The last object is
// unassigned for an augmenting path; for a reassignment it may be held by a
// person outside the path.
struct AlternatingPath {
  std::vector<PersonIndex> persons;
  std::vector<ObjectIndex> objects;

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Applies an augmenting path: each person on it takes its object and the
// cardinality grows by one. Throws InvalidPath unless every object lies in
// its receiver's eps-zone and the path alternates correctly.
void Augment(const Instance& inst, AuctionState& state,
             const AlternatingPath& path, EpsilonView eps);

// Largest price for object j held by person i that keeps (i, j) within
// eps-CS: a_ij - w + eps, with w the best profit of i over its other objects.
Value MaxCsPrice(const Instance& inst, const PriceVector& prices, PersonIndex i,
                 ObjectIndex j, Value eps);

// Augment, then raise the price of the last object to MaxCsPrice.
// Returns the increment of that price.
Value AugmentAndRaise(const Instance& inst, AuctionState& state,
                      const AlternatingPath& path, EpsilonView eps);

// Adds r to the price of every object in `objects`.
void ApplyPriceRise(AuctionState& state, const std::vector<ObjectIndex>& objects,
                    Value r);

// Largest common rise of `objects` keeping every member eps-CS, computed
// person by person: min over members of
//   eps_i + min_{j in zone(i)} profit - max_{j in A(i) \ objects} profit.
// kInfinity when no member has an arc leaving `objects`.
Value CoalitionRiseDirect(const Instance& inst, const PriceVector& prices,
                          const std::vector<PersonIndex>& members,
                          const std::vector<ObjectIndex>& objects,
                          EpsilonView eps);

enum class CoalitionOutcome {
  kGrowing,         // internal: persons still waiting to be processed
  kAugmentingPath,  // path() ends at an unassigned object
  kBlocked,         // rise() is the admissible common price rise
  kEmptyBorder,     // blocked with no border objects: no perfect matching
};

// An object entering the coalition's zones after a rise, with the earliest
// member (in processing order) whose zone now contains it.
struct EnteringObject {
  ObjectIndex object;
  PersonIndex receiver;
  PersonIndex holder;  // kNoPerson when unassigned

  friend bool operator==(const EnteringObject&, const EnteringObject&) = default;
};

// Plain-data view of a coalition, for comparisons and tests.
struct CoalitionSnapshot {
  CoalitionOutcome outcome = CoalitionOutcome::kGrowing;
  std::vector<PersonIndex> members;   // ascending
  std::vector<ObjectIndex> objects;   // O, ascending
  std::vector<ObjectIndex> border;    // B with finite profit loss, ascending
  std::vector<Value> profit_loss;     // d_j per border object, same order
  Value rise = 0;                     // r, when blocked
  AlternatingPath path;               // when an augmenting path was found

  friend bool operator==(const CoalitionSnapshot&,
                         const CoalitionSnapshot&) = default;
};

// The coalition of an unassigned person: everyone reachable by alternating
// paths through eps-zones, the objects they hold, and the border objects
// with their profit losses.
//
// Collective rises are kept lazy. Prices in the AuctionState stay untouched
// until Materialize(); price(j) reports the current price including pending
// rises. After Raise(), Expand() rescans only the members whose zone can
// have grown, so a sequence of rise / expand steps costs work proportional
// to the arcs of the persons involved, not to the coalition size.
class Coalition {
 public:
  Coalition(const Instance& inst, AuctionState& state, PersonIndex root,
            EpsilonView eps, RemovalRule rule = RemovalRule::kFifo,
            std::int64_t* node_visits = nullptr);

  // Processes waiting persons until an augmenting path is found or the
  // coalition is blocked.
  CoalitionOutcome Grow();
  CoalitionOutcome outcome() const { return outcome_; }

  // Common rise r of a blocked coalition: eps + min_j d_j.
  Value rise() const { return rise_; }

  // Raises every coalition object by r (lazily).
  void Raise(Value r);

  // Objects outside the coalition that now lie in some member's eps-zone,
  // ascending. Call after Raise().
  std::vector<EnteringObject> EnteringObjects();

  // Takes assigned entering objects into the coalition and queues their
  // holders. Unassigned ones are ignored. Call Grow() afterwards.
  void Absorb(const std::vector<EnteringObject>& entering);

  // Alternating path from the root to `person`, who then receives `object`.
  AlternatingPath PathTo(PersonIndex person, ObjectIndex object) const;
  const AlternatingPath& path() const { return path_; }

  // Writes pending rises into the AuctionState.
  void Materialize();

  Value price(ObjectIndex j) const {
    return state_.price(j) + (in_objects_[j] ? rise_total_ - join_rise_[j] : 0);
  }
  PersonIndex root() const { return root_; }
  bool is_member(PersonIndex i) const { return member_rank_[i] >= 0; }
  bool in_objects(ObjectIndex j) const { return in_objects_[j] != 0; }
  // Members in processing order.
  const std::vector<PersonIndex>& members() const { return members_; }
  // Objects in the order they joined.
  const std::vector<ObjectIndex>& objects() const { return objects_; }
  // Least profit within the member's zone at current prices.
  Value pi_hat(PersonIndex i) const {
    return pi_hat_[i] - (rise_total_ - scan_rise_[i]);
  }
  Value total_rise() const { return rise_total_; }

  CoalitionSnapshot Snapshot() const;

 private:
  struct Link {
    PersonIndex person = kNoPerson;
    ObjectIndex object = kNoObject;
  };
  struct HeapEntry {
    Value key;
    std::int32_t index;
    friend bool operator>(const HeapEntry& a, const HeapEntry& b) {
      return a.key != b.key ? a.key > b.key : a.index > b.index;
    }
  };

  void Enqueue(PersonIndex i, Link via);
  void TakeObject(ObjectIndex j);
  // Scans person i at current prices. Zone objects in the border are
  // absorbed (first scan) or reported in `entering` (rescan).
  bool Scan(PersonIndex i, std::vector<EnteringObject>* entering);
  void ComputeRise();

  const Instance& inst_;
  AuctionState& state_;
  EpsilonView eps_;
  RemovalRule rule_;
  std::int64_t* node_visits_;
  PersonIndex root_;

  std::vector<int> member_rank_;
  std::vector<char> queued_;
  std::vector<PersonIndex> members_;
  std::deque<PersonIndex> pending_;
  std::vector<Link> pred_;
  std::vector<Value> pi_hat_;
  std::vector<Value> scan_rise_;

  std::vector<char> in_objects_;
  std::vector<ObjectIndex> objects_;
  std::vector<Value> join_rise_;

  // Rise keys: eps_i + pi_hat_i - profit_ij + R_scan per border arc. The
  // rise still needed for j to enter i's zone is key - R.
  std::vector<HeapEntry> rise_keys_;
  // Person keys: pi_i - max_outside_i - eps_i + R_scan. A member can gain
  // zone objects only once R reaches its key.
  std::vector<HeapEntry> person_keys_;

  Value rise_total_ = 0;
  Value rise_ = 0;
  CoalitionOutcome outcome_ = CoalitionOutcome::kGrowing;
  AlternatingPath path_;
};

}  // namespace coopauction

#endif  // COOPAUCTION_COALITION_H_

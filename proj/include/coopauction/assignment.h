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

#ifndef COOPAUCTION_ASSIGNMENT_H_
#define COOPAUCTION_ASSIGNMENT_H_

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction {

class AssignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A partial assignment kept as two mutually inverse maps.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(int n)
      : object_of_(n, kNoObject), person_of_(n, kNoPerson) {}

  // Builds an assignment from (person, object) pairs; throws AssignmentError
  // on repeated persons or objects, or on pairs that are not arcs of `inst`.
  static PartialAssignment FromPairs(
      const Instance& inst,
      const std::vector<std::pair<PersonIndex, ObjectIndex>>& pairs);

  int size() const { return static_cast<int>(object_of_.size()); }
  int cardinality() const { return cardinality_; }
  bool complete() const { return cardinality_ == size(); }

  std::optional<ObjectIndex> object_of(PersonIndex i) const {
    if (object_of_[i] == kNoObject) return std::nullopt;
    return object_of_[i];
  }
  std::optional<PersonIndex> person_of(ObjectIndex j) const {
    if (person_of_[j] == kNoPerson) return std::nullopt;
    return person_of_[j];
  }

  // Sentinel-returning accessors for inner loops.
  ObjectIndex object_or_none(PersonIndex i) const { return object_of_[i]; }
  PersonIndex holder_or_none(ObjectIndex j) const { return person_of_[j]; }

  // Assigns i to j. Any object i held is released and any person holding j
  // is left unassigned; that person is returned.
  PersonIndex Assign(PersonIndex i, ObjectIndex j);
  void Unassign(PersonIndex i);

  // Assigned pairs ordered by person.
  std::vector<std::pair<PersonIndex, ObjectIndex>> Pairs() const;

  friend bool operator==(const PartialAssignment&,
                         const PartialAssignment&) = default;

 private:
  std::vector<ObjectIndex> object_of_;
  std::vector<PersonIndex> person_of_;
  int cardinality_ = 0;
};

}  // namespace coopauction

#endif  // COOPAUCTION_ASSIGNMENT_H_

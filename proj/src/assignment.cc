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

#include "coopauction/assignment.h"

#include <string>

namespace coopauction {

PartialAssignment PartialAssignment::FromPairs(
    const Instance& inst,
    const std::vector<std::pair<PersonIndex, ObjectIndex>>& pairs) {
  PartialAssignment asg(inst.size());
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= inst.size() || j < 0 || j >= inst.size()) {
      throw AssignmentError("assignment pair out of range");
    }
    if (!inst.admissible(i, j)) {
      throw AssignmentError("pair (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is not an arc");
    }
    if (asg.object_of_[i] != kNoObject || asg.person_of_[j] != kNoPerson) {
      throw AssignmentError("assignment repeats person " +
                            std::to_string(i + 1) + " or object " +
                            std::to_string(j + 1));
    }
    asg.Assign(i, j);
  }
  return asg;
}

PersonIndex PartialAssignment::Assign(PersonIndex i, ObjectIndex j) {
  if (object_of_[i] == j) return kNoPerson;
  Unassign(i);
  const PersonIndex displaced = person_of_[j];
  if (displaced != kNoPerson) {
    object_of_[displaced] = kNoObject;
    --cardinality_;
  }
  object_of_[i] = j;
  person_of_[j] = i;
  ++cardinality_;
  return displaced;
}

void PartialAssignment::Unassign(PersonIndex i) {
  const ObjectIndex j = object_of_[i];
  if (j == kNoObject) return;
  person_of_[j] = kNoPerson;
  object_of_[i] = kNoObject;
  --cardinality_;
}

std::vector<std::pair<PersonIndex, ObjectIndex>> PartialAssignment::Pairs()
    const {
  std::vector<std::pair<PersonIndex, ObjectIndex>> out;
  out.reserve(cardinality_);
  for (PersonIndex i = 0; i < size(); ++i) {
    if (object_of_[i] != kNoObject) out.emplace_back(i, object_of_[i]);
  }
  return out;
}

}  // namespace coopauction

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

#ifndef COOPAUCTION_TESTS_TEST_UTIL_H_
#define COOPAUCTION_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/coalition.h"
#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction::testing {

using Pairs = std::vector<std::pair<PersonIndex, ObjectIndex>>;

// Builds an instance from a dense table; kAbsent marks a missing arc.
inline constexpr Value kAbsent = std::numeric_limits<Value>::min();
Instance FromTable(const std::vector<std::vector<Value>>& table);

// Exhaustive reference for a coalition, straight from the definitions:
// persons reachable from the root by alternating paths through eps-zones.
struct ReferenceCoalition {
  bool has_augmenting_path = false;
  std::vector<PersonIndex> members;  // ascending
  std::vector<ObjectIndex> objects;  // held by members other than the root
  std::vector<ObjectIndex> border;   // outside objects adjacent to members
  Value rise = 0;                    // eps + min profit loss; kInfinity if none
};
ReferenceCoalition ReferenceBuild(const Instance& inst, const PriceVector& prices,
                                  const PartialAssignment& asg, PersonIndex root,
                                  Value eps);

// A random eps-CS state: random prices, then persons in random order take a
// random free object of their zone with probability `fill`.
struct RandomState {
  Instance inst;
  PriceVector prices;
  PartialAssignment asg;
  Value eps;
};
RandomState MakeRandomState(std::mt19937_64& rng, int n, Value range,
                            double density, Value eps, double fill);

// Every state of the random blocked-coalition suite: (state, root) pairs
// whose coalition is blocked with a nonempty border.
struct BlockedCase {
  RandomState state;
  PersonIndex root;
};
std::vector<BlockedCase> BlockedSuite(int count, std::uint64_t seed);

std::vector<ObjectIndex> Sorted(std::vector<ObjectIndex> v);

}  // namespace coopauction::testing

#endif  // COOPAUCTION_TESTS_TEST_UTIL_H_

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

#ifndef COOPAUCTION_GENERATORS_H_
#define COOPAUCTION_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction {

enum class Family { kThreeByThree, kFourByFour, kChain, kRandom, kInfeasible };

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

struct GenSpec {
  Family family = Family::kRandom;
  int n = 8;
  Value range = 100;     // C
  double density = 0.5;  // probability of each arc beyond the planted matching
  std::uint64_t seed = 1;
};

// Three persons; objects 1 and 2 worth C to everyone, object 3 worth 0.
Instance GenThreeByThree(Value range);

// GenThreeByThree plus a fourth person with arcs (3, 0) and (4, -1).
Instance GenFourByFour(Value range);

// Chain of n persons (root first) with doubled integer values: the root
// values objects 1 and 2 at 2, person m values object m at 2 and object m+1
// at 1, and the last person values object n-1 at 2 and object n at 1.
Instance GenChain(int n);

// Start state of the chain: person m holds object m for m = 1..n-1, the root
// is unassigned, prices are zero.
std::vector<std::pair<PersonIndex, ObjectIndex>> ChainStart(int n);

// Planted random permutation plus arcs at the given density, degree >= 2,
// values uniform in [-C, C]. Deterministic in the seed.
Instance GenRandom(int n, Value range, double density, std::uint64_t seed);

// Persons 1..n-1 can only take objects 1 and 2; person n takes 1 or n.
// No perfect matching for n >= 4.
Instance GenInfeasible(int n);

Instance Generate(const GenSpec& spec);

}  // namespace coopauction

#endif  // COOPAUCTION_GENERATORS_H_

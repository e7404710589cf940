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

#ifndef COOPAUCTION_TYPES_H_
#define COOPAUCTION_TYPES_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace coopauction {

// Values and prices are scaled integers. Every algorithm in the library works
// in exact integer arithmetic; fractional epsilons are realized by scaling the
// values instead.
using Value = std::int64_t;

// Persons and objects are 0-based internally. File formats and documents use
// 1-based indices.
using PersonIndex = std::int32_t;
using ObjectIndex = std::int32_t;

inline constexpr PersonIndex kNoPerson = -1;
inline constexpr ObjectIndex kNoObject = -1;

// Sentinel for "no finite bound" in profit-loss and rise computations. Chosen
// far from the int64 limits so that adding a few values cannot overflow.
inline constexpr Value kInfinity = std::numeric_limits<Value>::max() / 4;

using PriceVector = std::vector<Value>;

struct Arc {
  ObjectIndex object;
  Value value;

  friend bool operator==(const Arc&, const Arc&) = default;
};

}  // namespace coopauction

#endif  // COOPAUCTION_TYPES_H_

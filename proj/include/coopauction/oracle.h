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

#ifndef COOPAUCTION_ORACLE_H_
#define COOPAUCTION_ORACLE_H_

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coopauction/instance.h"
#include "coopauction/types.h"

namespace coopauction {

class TooLargeForOracle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleMaxSize = 10;

struct OracleSolution {
  Value value;
  std::vector<std::pair<PersonIndex, ObjectIndex>> pairs;  // (i, j), by person
};

// Exhaustive search over all complete assignments. Returns nullopt when the
// instance has no perfect matching. Throws TooLargeForOracle for n > 10.
std::optional<OracleSolution> ExactOracle(const Instance& inst);

}  // namespace coopauction

#endif  // COOPAUCTION_ORACLE_H_

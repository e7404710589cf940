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

#include "coopauction/oracle.h"

#include <limits>
#include <string>

namespace coopauction {
namespace {

struct Search {
  const Instance& inst;
  std::vector<char> taken;
  std::vector<ObjectIndex> current;
  std::vector<ObjectIndex> best;
  Value best_value = std::numeric_limits<Value>::min();
  bool found = false;

  void Run(PersonIndex i, Value total) {
    if (i == inst.size()) {
      if (!found || total > best_value) {
        found = true;
        best_value = total;
        best = current;
      }
      return;
    }
    for (const Arc& arc : inst.arcs(i)) {
      if (taken[arc.object]) continue;
      taken[arc.object] = 1;
      current[i] = arc.object;
      Run(i + 1, total + arc.value);
      taken[arc.object] = 0;
    }
  }
};

}  // namespace

std::optional<OracleSolution> ExactOracle(const Instance& inst) {
  if (inst.size() > kOracleMaxSize) {
    throw TooLargeForOracle("exhaustive oracle supports n <= " +
                            std::to_string(kOracleMaxSize));
  }
  Search search{inst, std::vector<char>(inst.size(), 0),
                std::vector<ObjectIndex>(inst.size(), kNoObject), {}};
  search.Run(0, 0);
  if (!search.found) return std::nullopt;
  OracleSolution solution{search.best_value, {}};
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    solution.pairs.emplace_back(i, search.best[i]);
  }
  return solution;
}

}  // namespace coopauction

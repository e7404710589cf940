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

#include "coopauction/epsilon.h"

namespace coopauction {

PersonEpsilon& AdaptiveUpdate(PersonEpsilon& eps, PersonIndex i,
                              const AdaptiveRule& rule) {
  Value& value = eps.values_[i];
  if (value >= rule.cap) return eps;
  value = std::min(rule.cap, value * rule.factor);
  return eps;
}

}  // namespace coopauction

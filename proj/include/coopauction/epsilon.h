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

#ifndef COOPAUCTION_EPSILON_H_
#define COOPAUCTION_EPSILON_H_

#include <algorithm>
#include <span>
#include <vector>

#include "coopauction/types.h"

namespace coopauction {

// Read-only epsilon lookup: either one value for every person or a
// person-dependent vector. Converts implicitly from a plain Value so the
// common uniform case reads naturally at call sites.
class EpsilonView {
 public:
  EpsilonView(Value uniform) : uniform_(uniform) {}  // NOLINT: implicit
  explicit EpsilonView(std::span<const Value> per_person)
      : per_person_(per_person) {}

  Value operator()(PersonIndex i) const {
    return per_person_.empty() ? uniform_ : per_person_[i];
  }
  bool is_uniform() const { return per_person_.empty(); }
  Value max() const {
    if (per_person_.empty()) return uniform_;
    return *std::max_element(per_person_.begin(), per_person_.end());
  }
  Value min() const {
    if (per_person_.empty()) return uniform_;
    return *std::min_element(per_person_.begin(), per_person_.end());
  }

 private:
  Value uniform_ = 0;
  std::span<const Value> per_person_;
};

struct AdaptiveRule {
  Value factor = 2;
  Value cap = 64;
};

// Person-dependent epsilon values; every entry stays within [base, cap].
class PersonEpsilon {
 public:
  PersonEpsilon(int n, Value base) : values_(n, base) {}

  Value operator[](PersonIndex i) const { return values_[i]; }
  void Reset(Value base) { std::fill(values_.begin(), values_.end(), base); }
  std::span<const Value> values() const { return values_; }
  EpsilonView view() const { return EpsilonView(std::span<const Value>(values_)); }
  Value max() const { return *std::max_element(values_.begin(), values_.end()); }

 private:
  friend PersonEpsilon& AdaptiveUpdate(PersonEpsilon&, PersonIndex,
                                       const AdaptiveRule&);
  std::vector<Value> values_;
};

// eps_i <- min(cap, eps_i * factor).
PersonEpsilon& AdaptiveUpdate(PersonEpsilon& eps, PersonIndex i,
                              const AdaptiveRule& rule);

}  // namespace coopauction

#endif  // COOPAUCTION_EPSILON_H_

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

#ifndef COOPAUCTION_INSTANCE_H_
#define COOPAUCTION_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coopauction/types.h"

namespace coopauction {

// Unchecked problem data as read from a file or produced by a generator.
struct RawInstance {
  int n = 0;
  std::vector<std::vector<Arc>> adj;  // adj[i] = admissible objects of person i
  std::string name;
};

enum class InstanceErrorKind {
  kEmptyInstance,
  kObjectOutOfRange,
  kDuplicateArc,
  kDegreeBelowTwo,
};

struct InstanceViolation {
  InstanceErrorKind kind;
  PersonIndex person = kNoPerson;
  ObjectIndex object = kNoObject;

  std::string Describe() const;
};

// Thrown by ValidateInstance; carries every violation found, not just the
// first one.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(std::vector<InstanceViolation> violations);

  const std::vector<InstanceViolation>& violations() const {
    return violations_;
  }
  bool Has(InstanceErrorKind kind) const;

 private:
  std::vector<InstanceViolation> violations_;
};

// An n x n assignment problem: n persons, n objects, and for each person an
// admissible object list sorted by object index with integer values.
// Immutable once constructed, so it can be shared across concurrent solves.
class Instance {
 public:
  int size() const { return n_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::string& name() const { return name_; }

  std::span<const Arc> arcs(PersonIndex i) const {
    return {arcs_.data() + offsets_[i], arcs_.data() + offsets_[i + 1]};
  }
  int degree(PersonIndex i) const {
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }

  // Value of arc (i, j), or nullopt when j is not admissible for i.
  std::optional<Value> value(PersonIndex i, ObjectIndex j) const;
  bool admissible(PersonIndex i, ObjectIndex j) const {
    return value(i, j).has_value();
  }

  RawInstance ToRaw() const;

  // Same graph with every value multiplied by `factor`.
  Instance Scaled(Value factor) const;

  // Structural equality; the name is a label and does not participate.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.arcs_ == b.arcs_;
  }

 private:
  friend Instance ValidateInstance(RawInstance raw);

  Instance() = default;

  int n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  std::string name_;
};

// Checks the instance invariants (n >= 1, objects in range, no duplicate
// arcs, every person has at least two admissible objects) and returns the
// canonical form with each adjacency list sorted by object index.
// Throws InstanceError listing all violations.
Instance ValidateInstance(RawInstance raw);

}  // namespace coopauction

#endif  // COOPAUCTION_INSTANCE_H_

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

#include "coopauction/instance.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace coopauction {

std::string InstanceViolation::Describe() const {
  std::ostringstream out;
  switch (kind) {
    case InstanceErrorKind::kEmptyInstance:
      out << "instance has no persons";
      break;
    case InstanceErrorKind::kObjectOutOfRange:
      out << "person " << person + 1 << ": object " << object + 1
          << " out of range";
      break;
    case InstanceErrorKind::kDuplicateArc:
      out << "person " << person + 1 << ": duplicate arc to object "
          << object + 1;
      break;
    case InstanceErrorKind::kDegreeBelowTwo:
      out << "person " << person + 1
          << ": fewer than two admissible objects";
      break;
  }
  return out.str();
}

namespace {

std::string JoinViolations(const std::vector<InstanceViolation>& violations) {
  std::string message = "invalid instance:";
  for (const InstanceViolation& v : violations) {
    message += "\n  " + v.Describe();
  }
  return message;
}

}  // namespace

InstanceError::InstanceError(std::vector<InstanceViolation> violations)
    : std::runtime_error(JoinViolations(violations)),
      violations_(std::move(violations)) {}

bool InstanceError::Has(InstanceErrorKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const InstanceViolation& v) { return v.kind == kind; });
}

std::optional<Value> Instance::value(PersonIndex i, ObjectIndex j) const {
  const std::span<const Arc> row = arcs(i);
  const auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const Arc& arc, ObjectIndex target) { return arc.object < target; });
  if (it == row.end() || it->object != j) return std::nullopt;
  return it->value;
}

RawInstance Instance::ToRaw() const {
  RawInstance raw;
  raw.n = n_;
  raw.name = name_;
  raw.adj.resize(n_);
  for (PersonIndex i = 0; i < n_; ++i) {
    const auto row = arcs(i);
    raw.adj[i].assign(row.begin(), row.end());
  }
  return raw;
}

Instance Instance::Scaled(Value factor) const {
  Instance copy = *this;
  for (Arc& arc : copy.arcs_) arc.value *= factor;
  return copy;
}

Instance ValidateInstance(RawInstance raw) {
  std::vector<InstanceViolation> violations;
  if (raw.n < 1) {
    violations.push_back({InstanceErrorKind::kEmptyInstance});
    throw InstanceError(std::move(violations));
  }
  raw.adj.resize(raw.n);

  for (PersonIndex i = 0; i < raw.n; ++i) {
    std::vector<Arc>& row = raw.adj[i];
    std::stable_sort(row.begin(), row.end(), [](const Arc& a, const Arc& b) {
      return a.object < b.object;
    });
    for (std::size_t k = 0; k < row.size(); ++k) {
      const ObjectIndex j = row[k].object;
      if (j < 0 || j >= raw.n) {
        violations.push_back({InstanceErrorKind::kObjectOutOfRange, i, j});
      } else if (k > 0 && row[k - 1].object == j) {
        violations.push_back({InstanceErrorKind::kDuplicateArc, i, j});
      }
    }
    if (row.size() < 2) {
      violations.push_back({InstanceErrorKind::kDegreeBelowTwo, i});
    }
  }
  if (!violations.empty()) throw InstanceError(std::move(violations));

  Instance inst;
  inst.n_ = raw.n;
  inst.name_ = std::move(raw.name);
  inst.offsets_.reserve(raw.n + 1);
  inst.offsets_.push_back(0);
  for (const auto& row : raw.adj) {
    inst.arcs_.insert(inst.arcs_.end(), row.begin(), row.end());
    inst.offsets_.push_back(inst.arcs_.size());
  }
  return inst;
}

}  // namespace coopauction

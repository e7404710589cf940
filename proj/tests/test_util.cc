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

#include "test_util.h"

#include <deque>

#include "coopauction/generators.h"

namespace coopauction::testing {
namespace {

std::vector<ObjectIndex> ZoneOf(const Instance& inst, const PriceVector& p,
                                PersonIndex i, Value eps) {
  Value best = std::numeric_limits<Value>::min();
  for (const Arc& a : inst.arcs(i)) best = std::max(best, a.value - p[a.object]);
  std::vector<ObjectIndex> zone;
  for (const Arc& a : inst.arcs(i)) {
    if (a.value - p[a.object] >= best - eps) zone.push_back(a.object);
  }
  return zone;
}

}  // namespace

Instance FromTable(const std::vector<std::vector<Value>>& table) {
  RawInstance raw;
  raw.n = static_cast<int>(table.size());
  raw.adj.resize(raw.n);
  for (int i = 0; i < raw.n; ++i) {
    for (int j = 0; j < static_cast<int>(table[i].size()); ++j) {
      if (table[i][j] != kAbsent) raw.adj[i].push_back({j, table[i][j]});
    }
  }
  return ValidateInstance(std::move(raw));
}

ReferenceCoalition ReferenceBuild(const Instance& inst, const PriceVector& prices,
                                  const PartialAssignment& asg, PersonIndex root,
                                  Value eps) {
  const int n = inst.size();
  ReferenceCoalition ref;
  std::vector<char> seen(n, 0);
  std::deque<PersonIndex> frontier{root};
  seen[root] = 1;
  while (!frontier.empty()) {
    const PersonIndex x = frontier.front();
    frontier.pop_front();
    for (const ObjectIndex j : ZoneOf(inst, prices, x, eps)) {
      const PersonIndex h = asg.holder_or_none(j);
      if (h == kNoPerson) {
        ref.has_augmenting_path = true;
      } else if (!seen[h]) {
        seen[h] = 1;
        frontier.push_back(h);
      }
    }
  }
  std::vector<char> in_objects(n, 0);
  for (PersonIndex x = 0; x < n; ++x) {
    if (!seen[x]) continue;
    ref.members.push_back(x);
    const ObjectIndex j = asg.object_or_none(x);
    if (j != kNoObject) in_objects[j] = 1;
  }
  std::vector<char> in_border(n, 0);
  ref.rise = kInfinity;
  for (const PersonIndex x : ref.members) {
    const std::vector<ObjectIndex> zone = ZoneOf(inst, prices, x, eps);
    Value zone_min = kInfinity;
    for (const ObjectIndex j : zone) {
      zone_min = std::min(zone_min, *inst.value(x, j) - prices[j]);
    }
    for (const Arc& a : inst.arcs(x)) {
      if (in_objects[a.object]) continue;
      in_border[a.object] = 1;
      ref.rise = std::min(ref.rise, eps + zone_min - (a.value - prices[a.object]));
    }
  }
  for (ObjectIndex j = 0; j < n; ++j) {
    if (in_objects[j]) ref.objects.push_back(j);
    if (in_border[j]) ref.border.push_back(j);
  }
  return ref;
}

RandomState MakeRandomState(std::mt19937_64& rng, int n, Value range,
                            double density, Value eps, double fill) {
  RandomState s{GenRandom(n, range, density, rng()), PriceVector(n, 0),
                PartialAssignment(n), eps};
  std::uniform_int_distribution<Value> price(0, range);
  for (Value& p : s.prices) p = price(rng);
  std::vector<PersonIndex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(fill);
  for (const PersonIndex i : order) {
    if (!take(rng)) continue;
    std::vector<ObjectIndex> free;
    for (const ObjectIndex j : ZoneOf(s.inst, s.prices, i, eps)) {
      if (s.asg.holder_or_none(j) == kNoPerson) free.push_back(j);
    }
    if (free.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    s.asg.Assign(i, free[pick(rng)]);
  }
  return s;
}

std::vector<BlockedCase> BlockedSuite(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, 8);
  const Value eps_choices[] = {0, 1, 2, 5};
  const double densities[] = {0.3, 0.6, 1.0};
  std::vector<BlockedCase> out;
  int round = 0;
  while (static_cast<int>(out.size()) < count) {
    const int n = size(rng);
    const Value eps = eps_choices[round % 4];
    const double density = densities[(round / 4) % 3];
    const Value range = round % 2 == 0 ? 10 : 1000;
    ++round;
    RandomState s = MakeRandomState(rng, n, range, density, eps, 0.9);
    for (PersonIndex root = 0; root < n; ++root) {
      if (s.asg.object_or_none(root) != kNoObject) continue;
      const ReferenceCoalition ref = ReferenceBuild(s.inst, s.prices, s.asg, root, eps);
      if (ref.has_augmenting_path || ref.border.empty()) continue;
      out.push_back({s, root});
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

std::vector<ObjectIndex> Sorted(std::vector<ObjectIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace coopauction::testing

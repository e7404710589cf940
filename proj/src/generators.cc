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

#include "coopauction/generators.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace coopauction {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilyNames = {{
    {Family::kThreeByThree, "three_by_three"},
    {Family::kFourByFour, "four_by_four"},
    {Family::kChain, "chain"},
    {Family::kRandom, "random"},
    {Family::kInfeasible, "infeasible"},
}};

}  // namespace

std::string_view FamilyName(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Instance GenThreeByThree(Value range) {
  if (range < 1) throw std::invalid_argument("three_by_three needs C >= 1");
  RawInstance raw{3, std::vector<std::vector<Arc>>(3), {}};
  for (auto& arcs : raw.adj) arcs = {{0, range}, {1, range}, {2, 0}};
  raw.name = "three_by_three_C" + std::to_string(range);
  return ValidateInstance(std::move(raw));
}

Instance GenFourByFour(Value range) {
  if (range < 2) throw std::invalid_argument("four_by_four needs C >= 2");
  RawInstance raw{4, std::vector<std::vector<Arc>>(4), {}};
  for (int i = 0; i < 3; ++i) raw.adj[i] = {{0, range}, {1, range}, {2, 0}};
  raw.adj[3] = {{2, 0}, {3, -1}};
  raw.name = "four_by_four_C" + std::to_string(range);
  return ValidateInstance(std::move(raw));
}

Instance GenChain(int n) {
  if (n < 4) throw std::invalid_argument("chain needs n >= 4");
  // Person 0 is the root; person m (1..n-1) and object m-1 form the chain,
  // object n-1 is the free end.
  RawInstance raw{n, std::vector<std::vector<Arc>>(n), {}};
  raw.adj[0] = {{0, 2}, {1, 2}};
  for (int m = 1; m <= n - 2; ++m) raw.adj[m] = {{m - 1, 2}, {m, 1}};
  raw.adj[n - 1] = {{n - 2, 2}, {n - 1, 1}};
  raw.name = "chain_" + std::to_string(n);
  return ValidateInstance(std::move(raw));
}

std::vector<std::pair<PersonIndex, ObjectIndex>> ChainStart(int n) {
  std::vector<std::pair<PersonIndex, ObjectIndex>> pairs;
  for (int m = 1; m <= n - 1; ++m) pairs.emplace_back(m, m - 1);
  return pairs;
}

Instance GenRandom(int n, Value range, double density, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random instances need n >= 2");
  if (range < 0) throw std::invalid_argument("C must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<ObjectIndex> planted(n);
  std::iota(planted.begin(), planted.end(), 0);
  std::shuffle(planted.begin(), planted.end(), rng);

  std::bernoulli_distribution extra(std::clamp(density, 0.0, 1.0));
  std::uniform_int_distribution<Value> value(-range, range);
  std::uniform_int_distribution<ObjectIndex> other(0, n - 2);

  RawInstance raw{n, std::vector<std::vector<Arc>>(n), {}};
  for (PersonIndex i = 0; i < n; ++i) {
    std::vector<char> used(n, 0);
    used[planted[i]] = 1;
    for (ObjectIndex j = 0; j < n; ++j) {
      if (j != planted[i] && extra(rng)) used[j] = 1;
    }
    if (std::count(used.begin(), used.end(), 1) < 2) {
      ObjectIndex j = other(rng);
      if (j >= planted[i]) ++j;
      used[j] = 1;
    }
    for (ObjectIndex j = 0; j < n; ++j) {
      if (used[j]) raw.adj[i].push_back({j, value(rng)});
    }
  }
  raw.name = "random_n" + std::to_string(n) + "_C" + std::to_string(range) +
             "_s" + std::to_string(seed);
  return ValidateInstance(std::move(raw));
}

Instance GenInfeasible(int n) {
  if (n < 3) throw std::invalid_argument("infeasible needs n >= 3");
  RawInstance raw{n, std::vector<std::vector<Arc>>(n), {}};
  for (PersonIndex i = 0; i < n - 1; ++i) raw.adj[i] = {{0, 1}, {1, 0}};
  raw.adj[n - 1] = {{0, 1}, {n - 1, 0}};
  raw.name = "infeasible_" + std::to_string(n);
  return ValidateInstance(std::move(raw));
}

Instance Generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kThreeByThree:
      return GenThreeByThree(spec.range);
    case Family::kFourByFour:
      return GenFourByFour(spec.range);
    case Family::kChain:
      return GenChain(spec.n);
    case Family::kRandom:
      return GenRandom(spec.n, spec.range, spec.density, spec.seed);
    case Family::kInfeasible:
      return GenInfeasible(spec.n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace coopauction

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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coopauction/assignment.h"
#include "coopauction/duality.h"
#include "coopauction/generators.h"
#include "coopauction/instance.h"
#include "test_util.h"

namespace coopauction {
namespace {

using testing::FromTable;
using testing::kAbsent;

constexpr Value kC = 100;

TEST(ValidateInstanceTest, AcceptsThreeByThree) {
  const Instance inst = GenThreeByThree(kC);
  EXPECT_EQ(inst.size(), 3);
  EXPECT_EQ(inst.num_arcs(), 9u);
  for (PersonIndex i = 0; i < 3; ++i) {
    EXPECT_EQ(inst.value(i, 0), kC);
    EXPECT_EQ(inst.value(i, 1), kC);
    EXPECT_EQ(inst.value(i, 2), 0);
  }
}

TEST(ValidateInstanceTest, RejectsDegreeBelowTwo) {
  RawInstance raw{2, {{{0, 1}}, {{0, 1}, {1, 1}}}, ""};
  try {
    ValidateInstance(raw);
    FAIL() << "expected InstanceError";
  } catch (const InstanceError& e) {
    EXPECT_TRUE(e.Has(InstanceErrorKind::kDegreeBelowTwo));
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].person, 0);
  }
}

TEST(ValidateInstanceTest, SortsAdjacency) {
  RawInstance raw{2, {{{1, 5}, {0, 3}}, {{0, 1}, {1, 1}}}, ""};
  const Instance inst = ValidateInstance(raw);
  ASSERT_EQ(inst.degree(0), 2);
  EXPECT_EQ(inst.arcs(0)[0], (Arc{0, 3}));
  EXPECT_EQ(inst.arcs(0)[1], (Arc{1, 5}));
}

TEST(ValidateInstanceTest, ReportsEveryViolation) {
  RawInstance raw{2, {{{0, 1}, {0, 2}, {5, 1}}, {{1, 1}}}, ""};
  try {
    ValidateInstance(raw);
    FAIL() << "expected InstanceError";
  } catch (const InstanceError& e) {
    EXPECT_TRUE(e.Has(InstanceErrorKind::kDuplicateArc));
    EXPECT_TRUE(e.Has(InstanceErrorKind::kObjectOutOfRange));
    EXPECT_TRUE(e.Has(InstanceErrorKind::kDegreeBelowTwo));
  }
}

TEST(ValidateInstanceTest, RejectsEmpty) {
  try {
    ValidateInstance(RawInstance{});
    FAIL();
  } catch (const InstanceError& e) {
    EXPECT_TRUE(e.Has(InstanceErrorKind::kEmptyInstance));
  }
}

TEST(ValidateInstanceTest, Idempotent) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const Instance inst = GenRandom(6, 50, 0.4, rng());
    EXPECT_EQ(ValidateInstance(inst.ToRaw()), inst);
  }
}

TEST(ProfitTest, ThreeByThreeTies) {
  const Instance inst = GenThreeByThree(kC);
  const ProfitResult r = Profit(inst, {0, 0, 0}, 2);
  EXPECT_EQ(r.profit, kC);
  EXPECT_EQ(r.argmax, (std::vector<ObjectIndex>{0, 1}));
}

TEST(ProfitTest, AllObjectsTie) {
  const Instance inst = GenThreeByThree(kC);
  const ProfitResult r = Profit(inst, {kC, kC, 0}, 2);
  EXPECT_EQ(r.profit, 0);
  EXPECT_EQ(r.argmax, (std::vector<ObjectIndex>{0, 1, 2}));
}

TEST(ProfitTest, UniqueBest) {
  const Instance inst = FromTable({{5, 1}, {1, 1}});
  const ProfitResult r = Profit(inst, {0, 0}, 0);
  EXPECT_EQ(r.profit, 5);
  EXPECT_EQ(r.argmax, (std::vector<ObjectIndex>{0}));
}

TEST(PrimalValueTest, Examples) {
  const Instance three = GenThreeByThree(kC);
  EXPECT_EQ(PrimalValue(three, PartialAssignment(3)), 0);
  EXPECT_EQ(PrimalValue(three, PartialAssignment::FromPairs(three, {{0, 0}, {1, 1}, {2, 2}})),
            2 * kC);
  const Instance four = GenFourByFour(kC);
  EXPECT_EQ(PrimalValue(four, PartialAssignment::FromPairs(
                                  four, {{0, 0}, {1, 1}, {2, 2}, {3, 3}})),
            2 * kC - 1);
}

TEST(DualCostTest, Examples) {
  const Instance inst = GenThreeByThree(kC);
  EXPECT_EQ(DualCost(inst, {0, 0, 0}), 3 * kC);
  EXPECT_EQ(DualCost(inst, {kC + 1, kC + 1, 0}), 2 * kC + 2);
}

TEST(DualCostTest, WeakDualityExhaustive) {
  // Every price vector in a small box against every complete assignment.
  const Instance inst = FromTable({{3, kAbsent, 1, 0}, {2, 2, kAbsent, 1},
                                   {kAbsent, 4, 0, 0}, {1, 0, 2, kAbsent}});
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PartialAssignment> complete;
  do {
    bool ok = true;
    for (int i = 0; i < 4; ++i) ok = ok && inst.admissible(i, perm[i]);
    if (!ok) continue;
    testing::Pairs pairs;
    for (int i = 0; i < 4; ++i) pairs.emplace_back(i, perm[i]);
    complete.push_back(PartialAssignment::FromPairs(inst, pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  ASSERT_FALSE(complete.empty());
  int checked = 0;
  for (int code = 0; code < 5 * 5 * 5 * 5; ++code) {
    PriceVector p = {code % 5 - 1, code / 5 % 5 - 1, code / 25 % 5 - 1, code / 125 - 1};
    for (const PartialAssignment& asg : complete) {
      EXPECT_GE(DualCost(inst, p), PrimalValue(inst, asg));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(CheckEpsCsTest, StartStateIsCs) {
  const Instance inst = GenThreeByThree(kC);
  const auto asg = PartialAssignment::FromPairs(inst, {{0, 0}, {1, 1}});
  EXPECT_TRUE(CheckEpsCs(inst, {0, 0, 0}, asg, 0).ok());
}

TEST(CheckEpsCsTest, ReportsDeficit) {
  const Instance inst = GenThreeByThree(kC);
  const auto asg = PartialAssignment::FromPairs(inst, {{0, 0}});
  const EpsCsReport report = CheckEpsCs(inst, {kC, 0, 0}, asg, 0);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], (EpsCsViolation{0, 0, kC}));
  EXPECT_TRUE(CheckEpsCs(inst, {kC, 0, 0}, asg, kC).ok());
}

TEST(CheckEpsCsTest, MonotoneInEpsilon) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = GenRandom(5, 20, 0.6, rng());
    PriceVector p(5);
    for (Value& v : p) v = static_cast<Value>(rng() % 21);
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    PartialAssignment asg(5);
    for (int i = 0; i < 5; ++i) {
      if (inst.admissible(i, perm[i])) asg.Assign(i, perm[i]);
    }
    for (Value eps = 0; eps < 30; ++eps) {
      if (CheckEpsCs(inst, p, asg, eps).ok()) {
        EXPECT_TRUE(CheckEpsCs(inst, p, asg, eps + 1).ok());
      }
    }
  }
}

TEST(DualityGapTest, ZeroAtCsOptimum) {
  const Instance inst = GenThreeByThree(kC);
  const auto asg = PartialAssignment::FromPairs(inst, {{0, 0}, {1, 1}, {2, 2}});
  const PriceVector p = {kC, kC, 0};
  ASSERT_TRUE(CheckEpsCs(inst, p, asg, 0).ok());
  EXPECT_EQ(DualityGap(inst, p, asg), 0);
}

TEST(DualityGapTest, FourByFourTerminalState) {
  // Values scaled by 5 so that eps = 1 stands for 0.2.
  const Value eps = 1;
  const Instance inst = GenFourByFour(kC).Scaled(5);
  const auto asg = PartialAssignment::FromPairs(inst, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  const PriceVector p = {5 * (kC + 1) + 2 * eps, 5 * (kC + 1) + 2 * eps, 5 + eps, 0};
  ASSERT_TRUE(CheckEpsCs(inst, p, asg, eps).ok());
  const Value gap = DualityGap(inst, p, asg);
  // By hand: profits (-6, -6, -6, -5) sum to -23, prices sum to 1020,
  // primal is 5 * (2C - 1) = 995.
  EXPECT_EQ(gap, 2);
  EXPECT_LE(gap, 4 * eps);
}

TEST(DualityGapTest, BoundedByNEpsUnderEpsCs) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int k = 0; k < 3000; ++k) {
    const Value eps = 1 + static_cast<Value>(rng() % 5);
    testing::RandomState s = testing::MakeRandomState(rng, 5, 30, 1.0, eps, 1.0);
    if (!s.asg.complete()) continue;
    ASSERT_TRUE(CheckEpsCs(s.inst, s.prices, s.asg, eps).ok());
    const Value gap = DualityGap(s.inst, s.prices, s.asg);
    EXPECT_GE(gap, 0);
    EXPECT_LE(gap, 5 * eps);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(DualityGapTest, IncompleteThrows) {
  const Instance inst = GenThreeByThree(kC);
  EXPECT_THROW(DualityGap(inst, {0, 0, 0}, PartialAssignment(3)), AssignmentError);
}

TEST(PartialAssignmentTest, FromPairsRejectsBadPairs) {
  const Instance inst = GenFourByFour(kC);
  EXPECT_THROW(PartialAssignment::FromPairs(inst, {{3, 0}}), AssignmentError);
  EXPECT_THROW(PartialAssignment::FromPairs(inst, {{0, 0}, {1, 0}}), AssignmentError);
  EXPECT_THROW(PartialAssignment::FromPairs(inst, {{0, 7}}), AssignmentError);
}

TEST(PartialAssignmentTest, AssignDisplacesHolder) {
  PartialAssignment asg(3);
  asg.Assign(0, 1);
  EXPECT_EQ(asg.Assign(2, 1), 0);
  EXPECT_EQ(asg.cardinality(), 1);
  EXPECT_EQ(asg.object_of(2), 1);
  EXPECT_FALSE(asg.object_of(0).has_value());
  asg.Assign(2, 0);
  EXPECT_FALSE(asg.person_of(1).has_value());
  EXPECT_EQ(asg.cardinality(), 1);
}

}  // namespace
}  // namespace coopauction

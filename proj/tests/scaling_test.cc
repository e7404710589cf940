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

#include <random>

#include "coopauction/duality.h"
#include "coopauction/generators.h"
#include "coopauction/oracle.h"
#include "coopauction/result_io.h"
#include "coopauction/scaling.h"
#include "test_util.h"

namespace coopauction {
namespace {

using testing::FromTable;

TEST(EpsilonScheduleTest, DividesByTheta) {
  EXPECT_EQ(EpsilonSchedule(100, 1, 4), (std::vector<Value>{100, 25, 6, 1}));
  EXPECT_EQ(EpsilonSchedule(1, 1, 4), (std::vector<Value>{1}));
  EXPECT_EQ(EpsilonSchedule(64, 1, 2), (std::vector<Value>{64, 32, 16, 8, 4, 2, 1}));
}

TEST(EpsilonScheduleTest, RejectsBadParameters) {
  EXPECT_THROW(EpsilonSchedule(10, 1, 1), std::invalid_argument);
  EXPECT_THROW(EpsilonSchedule(10, 0, 4), std::invalid_argument);
  EXPECT_THROW(EpsilonSchedule(1, 5, 4), std::invalid_argument);
}

TEST(OracleTest, SmallExamples) {
  EXPECT_EQ(ExactOracle(GenThreeByThree(100))->value, 200);
  EXPECT_EQ(ExactOracle(GenFourByFour(100))->value, 199);
  EXPECT_FALSE(ExactOracle(GenInfeasible(5)).has_value());
  EXPECT_THROW(ExactOracle(GenRandom(11, 10, 0.5, 1)), TooLargeForOracle);
}

TEST(OracleTest, PairsAchieveValue) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 30; ++k) {
    const Instance inst = GenRandom(6, 100, 0.5, rng());
    const auto sol = ExactOracle(inst);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(PrimalValue(inst, PartialAssignment::FromPairs(inst, sol->pairs)), sol->value);
  }
}

class SolveOracleTest : public ::testing::TestWithParam<Algorithm> {};

TEST_P(SolveOracleTest, MatchesExactOptimum) {
  const Algorithm algorithm = GetParam();
  std::mt19937_64 rng(42);
  int solved = 0;
  for (int k = 0; k < 60; ++k) {
    const int n = 3 + k % 6;
    const Value c = k % 2 == 0 ? 10 : 1000;
    const double density = (k / 2) % 2 == 0 ? 0.5 : 1.0;
    const Instance inst = GenRandom(n, c, density, rng());
    SolveConfig cfg;
    cfg.algorithm = algorithm;
    const SolveResult r = Solve(inst, cfg);
    if (algorithm == Algorithm::kConservative && !IsComplete(r.status)) continue;
    ASSERT_EQ(r.status, SolveStatus::kOptimal) << inst.name();
    EXPECT_EQ(r.primal_value, ExactOracle(inst)->value) << inst.name();
    EXPECT_TRUE(VerifySolution(inst.Scaled(r.scale), r).ok()) << inst.name();
    ++solved;
  }
  EXPECT_GT(solved, 0);
}

INSTANTIATE_TEST_SUITE_P(AllAlgorithms, SolveOracleTest,
                         ::testing::ValuesIn(kAllAlgorithms),
                         [](const auto& info) {
                           return std::string(AlgorithmName(info.param));
                         });

TEST(SolveTest, RejectsConservativeWithEps) {
  SolveConfig cfg;
  cfg.algorithm = Algorithm::kConservative;
  cfg.scaling = false;
  cfg.eps = 1;
  EXPECT_THROW(Solve(GenThreeByThree(10), cfg), std::invalid_argument);
  cfg.algorithm = Algorithm::kAggressive;
  cfg.eps = 0;
  EXPECT_THROW(Solve(GenThreeByThree(10), cfg), std::invalid_argument);
}

TEST(SolveTest, UnscaledSinglePhase) {
  SolveConfig cfg;
  cfg.algorithm = Algorithm::kAggressive;
  cfg.scaling = false;
  cfg.eps = 5;
  const SolveResult r = Solve(GenRandom(8, 100, 0.5, 3), cfg);
  EXPECT_EQ(r.scale, 1);
  ASSERT_EQ(r.phases.size(), 1u);
  EXPECT_EQ(r.phases[0].eps, 5);
  EXPECT_TRUE(IsComplete(r.status));
}

TEST(SolveTest, PhasesFollowSchedule) {
  SolveConfig cfg;
  cfg.algorithm = Algorithm::kCombined;
  cfg.eps0 = 256;
  const SolveResult r = Solve(GenRandom(6, 100, 0.5, 9), cfg);
  ASSERT_EQ(r.phases.size(), EpsilonSchedule(256, 1, 4).size());
  EXPECT_EQ(r.phases.front().eps, 256);
  EXPECT_EQ(r.phases.back().eps, 1);
  EXPECT_EQ(r.phases.front().discarded_pairs, 0);
  Counters sum;
  for (const PhaseSummary& p : r.phases) sum += p.counters;
  EXPECT_EQ(sum, r.counters);
}

TEST(SolveTest, DualityGapWithinScaledBound) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    const Instance inst = GenRandom(7, 200, 0.6, rng());
    SolveConfig cfg;
    cfg.algorithm = Algorithm::kExpanding;
    const SolveResult r = Solve(inst, cfg);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    const Value gap = r.dual_cost - r.primal_value * r.scale;
    EXPECT_GE(gap, 0);
    EXPECT_LE(gap, 7 * r.epsilon_final);
    EXPECT_LT(gap, r.scale);
  }
}

TEST(RescaleAssignmentTest, DropsOnlyViolators) {
  const Instance inst = GenThreeByThree(100);
  const auto asg = PartialAssignment::FromPairs(inst, {{0, 0}, {1, 1}, {2, 2}});
  std::vector<std::pair<PersonIndex, ObjectIndex>> discarded;
  // Eps-CS at 10 but not at 1: person 2 holds object 2 at profit -5
  // while objects 0 and 1 give 0.
  const PriceVector p = {100, 100, 5};
  const PartialAssignment out = RescaleAssignment(inst, p, asg, 1, &discarded);
  ASSERT_EQ(discarded.size(), 1u);
  EXPECT_EQ(discarded[0], (std::pair<PersonIndex, ObjectIndex>{2, 2}));
  EXPECT_EQ(out.cardinality(), 2);
  EXPECT_TRUE(CheckEpsCs(inst, p, out, 1).ok());
  EXPECT_EQ(RescaleAssignment(inst, p, asg, 10).cardinality(), 3);
}

TEST(RescaleAssignmentTest, PhaseResultStaysEpsCs) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const testing::RandomState s = testing::MakeRandomState(rng, 6, 50, 0.6, 8, 1.0);
    for (const Value eps : {Value{0}, Value{1}, Value{2}, Value{8}}) {
      const PartialAssignment out = RescaleAssignment(s.inst, s.prices, s.asg, eps);
      EXPECT_TRUE(CheckEpsCs(s.inst, s.prices, out, eps).ok());
      for (const auto& [i, j] : out.Pairs()) EXPECT_EQ(s.asg.object_of(i), j);
    }
  }
}

TEST(AdaptiveTest, ReachesTargetAndOptimal) {
  for (const Value c : {Value{100}, Value{1000}, Value{10000}}) {
    for (const Algorithm a : {Algorithm::kAggressive, Algorithm::kCombined}) {
      SolveConfig cfg;
      cfg.algorithm = a;
      cfg.adaptive = true;
      cfg.initial_assignment = {{0, 0}, {1, 1}};
      const SolveResult r = Solve(GenThreeByThree(c), cfg);
      EXPECT_EQ(r.status, SolveStatus::kOptimal);
      EXPECT_EQ(r.epsilon_final, 1);
      EXPECT_EQ(r.primal_value, 2 * c);
    }
  }
}

TEST(AdaptiveTest, FewerIterationsInPriceWar) {
  const Instance inst = GenThreeByThree(10000);
  SolveConfig cfg;
  cfg.algorithm = Algorithm::kAggressive;
  cfg.scaling = false;
  cfg.initial_assignment = {{0, 0}, {1, 1}};
  const SolveResult plain = Solve(inst, cfg);
  cfg.adaptive = true;
  const SolveResult adaptive = Solve(inst, cfg);
  EXPECT_EQ(adaptive.primal_value, plain.primal_value);
  EXPECT_LT(adaptive.counters.iterations, plain.counters.iterations);
}

TEST(FeasibilityTest, DetectsMissingMatching) {
  EXPECT_TRUE(FeasibilityCheck(GenThreeByThree(10)));
  EXPECT_TRUE(FeasibilityCheck(GenInfeasible(3)));
  for (const int n : {4, 5, 8}) EXPECT_FALSE(FeasibilityCheck(GenInfeasible(n)));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(FeasibilityCheck(GenRandom(8, 10, 0.3, rng())));
}

TEST(FeasibilityTest, SolveShortCircuits) {
  SolveConfig cfg;
  cfg.check_feasibility = true;
  const SolveResult r = Solve(GenInfeasible(5), cfg);
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  EXPECT_EQ(r.infeasibility, InfeasibilityReason::kFeasibilityCheck);
}

TEST(ArtificialPairsTest, CertifiesInfeasible) {
  for (const Algorithm a : {Algorithm::kAggressive, Algorithm::kExpanding,
                            Algorithm::kCombined}) {
    SolveConfig cfg;
    cfg.algorithm = a;
    cfg.artificial_pairs = true;
    const SolveResult r = Solve(GenInfeasible(5), cfg);
    EXPECT_EQ(r.status, SolveStatus::kInfeasible) << AlgorithmName(a);
    EXPECT_EQ(r.infeasibility, InfeasibilityReason::kArtificialArc) << AlgorithmName(a);
  }
}

TEST(ArtificialPairsTest, FeasibleUnchanged) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 20; ++k) {
    const Instance inst = GenRandom(6, 100, 0.4, rng());
    SolveConfig cfg;
    cfg.artificial_pairs = true;
    const SolveResult r = Solve(inst, cfg);
    EXPECT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_EQ(r.primal_value, ExactOracle(inst)->value);
  }
}

TEST(ArtificialPairsTest, AddsOnlyMissingDiagonal) {
  const Instance inst = FromTable({{5, 1, testing::kAbsent}, {1, testing::kAbsent, 2},
                                   {1, 2, 3}});
  const Instance padded = AddArtificialPairs(inst, 50);
  EXPECT_EQ(padded.value(1, 1), -50);
  EXPECT_EQ(padded.value(0, 0), 5);
  EXPECT_EQ(padded.num_arcs(), inst.num_arcs() + 1);
}

TEST(InitialPricesTest, MinValueAndGiven) {
  const Instance inst = FromTable({{5, 1}, {3, 4}});
  EXPECT_EQ(MinValuePrices(inst), (PriceVector{3, 1}));
  SolveConfig cfg;
  cfg.initial_prices = InitialPrices::kMinValue;
  EXPECT_EQ(Solve(inst, cfg).primal_value, 9);
  cfg.initial_prices = InitialPrices::kGiven;
  cfg.given_prices = {0, 0};
  EXPECT_EQ(Solve(inst, cfg).primal_value, 9);
  cfg.given_prices = {0};
  EXPECT_THROW(Solve(inst, cfg), std::invalid_argument);
}

TEST(InitialStateTest, ViolatingStartThrows) {
  SolveConfig cfg;
  cfg.algorithm = Algorithm::kExpanding;
  cfg.scaling = false;
  cfg.eps = 1;
  cfg.initial_prices = InitialPrices::kGiven;
  cfg.given_prices = {100, 0, 0};
  cfg.initial_assignment = {{0, 0}};
  EXPECT_THROW(Solve(GenThreeByThree(100), cfg), InitialStateViolatesEpsCs);
}

}  // namespace
}  // namespace coopauction

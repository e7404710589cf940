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

#include "coopauction/scaling.h"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "coopauction/coop_auction.h"
#include "coopauction/duality.h"
#include "coopauction/noncoop_auction.h"

namespace coopauction {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kAlgorithmNames =
    {{
        {Algorithm::kConservative, "conservative"},
        {Algorithm::kAggressive, "aggressive"},
        {Algorithm::kCooperative, "cooperative"},
        {Algorithm::kExpanding, "expanding"},
        {Algorithm::kCombined, "combined"},
        {Algorithm::kReassign, "reassign"},
    }};

bool TryAugment(const Instance& inst, PersonIndex i, std::vector<char>& seen,
                std::vector<PersonIndex>& holder) {
  for (const Arc& arc : inst.arcs(i)) {
    if (seen[arc.object]) continue;
    seen[arc.object] = 1;
    if (holder[arc.object] == kNoPerson ||
        TryAugment(inst, holder[arc.object], seen, holder)) {
      holder[arc.object] = i;
      return true;
    }
  }
  return false;
}

SolveResult RunPhase(const Instance& inst, const SolveConfig& cfg, Value eps,
                     bool adaptive, bool first, PriceVector prices,
                     PartialAssignment asg) {
  if (cfg.algorithm == Algorithm::kConservative ||
      cfg.algorithm == Algorithm::kAggressive) {
    AuctionConfig ac;
    ac.eps = eps;
    ac.person_order = cfg.person_order;
    ac.stall_window = cfg.stall_window;
    ac.max_iterations = cfg.max_iterations;
    ac.adaptive = adaptive;
    ac.adaptive_rule = cfg.adaptive_rule;
    ac.trace_start = first;
    ac.after_iteration = cfg.after_iteration;
    ac.tracer = cfg.tracer;
    return RunNoncoop(inst, ac, std::move(prices), std::move(asg));
  }
  CoopConfig cc;
  cc.eps = eps;
  cc.person_order = cfg.person_order;
  cc.stall_window = cfg.stall_window;
  cc.max_iterations = cfg.max_iterations;
  cc.adaptive = adaptive;
  cc.adaptive_rule = cfg.adaptive_rule;
  cc.trace_start = first;
  cc.after_iteration = cfg.after_iteration;
  cc.tracer = cfg.tracer;
  cc.removal_rule = cfg.removal_rule;
  switch (cfg.algorithm) {
    case Algorithm::kCooperative:
      cc.variant = CoopVariant::kPurely;
      break;
    case Algorithm::kExpanding:
      cc.variant = CoopVariant::kExpanding;
      break;
    case Algorithm::kCombined:
      cc.variant = CoopVariant::kCombined;
      break;
    default:
      cc.variant = CoopVariant::kReassign;
      break;
  }
  return RunCoop(inst, cc, std::move(prices), std::move(asg));
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, name] : kAlgorithmNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [a, n] : kAlgorithmNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::vector<Value> EpsilonSchedule(Value eps0, Value eps_final, Value theta) {
  if (theta < 2) throw std::invalid_argument("theta must be at least 2");
  if (eps_final < 1 || eps0 < eps_final) {
    throw std::invalid_argument("need eps0 >= eps_final >= 1");
  }
  std::vector<Value> schedule;
  for (Value e = eps0; e > eps_final; e /= theta) schedule.push_back(e);
  schedule.push_back(eps_final);
  return schedule;
}

Value DefaultEps0(Value scaled_range) { return std::max<Value>(1, scaled_range / 5); }

PriceVector MinValuePrices(const Instance& inst) {
  const Value unset = std::numeric_limits<Value>::max();
  PriceVector prices(inst.size(), unset);
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    for (const Arc& arc : inst.arcs(i)) {
      prices[arc.object] = std::min(prices[arc.object], arc.value);
    }
  }
  for (Value& p : prices) {
    if (p == unset) p = 0;
  }
  return prices;
}

PartialAssignment RescaleAssignment(
    const Instance& inst, const PriceVector& prices, const PartialAssignment& asg,
    EpsilonView eps, std::vector<std::pair<PersonIndex, ObjectIndex>>* discarded) {
  PartialAssignment out = asg;
  for (const EpsCsViolation& v : CheckEpsCs(inst, prices, asg, eps).violations) {
    out.Unassign(v.person);
    if (discarded != nullptr) discarded->emplace_back(v.person, v.object);
  }
  return out;
}

bool FeasibilityCheck(const Instance& inst) {
  std::vector<PersonIndex> holder(inst.size(), kNoPerson);
  for (PersonIndex i = 0; i < inst.size(); ++i) {
    std::vector<char> seen(inst.size(), 0);
    if (!TryAugment(inst, i, seen, holder)) return false;
  }
  return true;
}

Value DefaultArtificialPenalty(const Instance& inst) {
  return (2 * static_cast<Value>(inst.size()) + 1) * (ValueRange(inst) + 1);
}

Instance AddArtificialPairs(const Instance& inst, std::optional<Value> penalty) {
  const Value pen = penalty.value_or(DefaultArtificialPenalty(inst));
  RawInstance raw = inst.ToRaw();
  for (PersonIndex i = 0; i < raw.n; ++i) {
    if (!inst.admissible(i, i)) raw.adj[i].push_back({i, -pen});
  }
  return ValidateInstance(std::move(raw));
}

bool UsesArtificialArc(const Instance& original, const PartialAssignment& asg) {
  for (const auto& [i, j] : asg.Pairs()) {
    if (!original.admissible(i, j)) return true;
  }
  return false;
}

SolveResult Solve(const Instance& inst, const SolveConfig& cfg) {
  const int n = inst.size();
  if (cfg.algorithm == Algorithm::kConservative && !cfg.scaling && cfg.eps != 0) {
    throw std::invalid_argument("the conservative auction runs at epsilon 0");
  }
  if (cfg.algorithm == Algorithm::kAggressive && !cfg.scaling && cfg.eps <= 0) {
    throw std::invalid_argument("the aggressive auction needs epsilon > 0");
  }

  SolveResult infeasible;
  if (cfg.check_feasibility && !FeasibilityCheck(inst)) {
    infeasible.status = SolveStatus::kInfeasible;
    infeasible.infeasibility = InfeasibilityReason::kFeasibilityCheck;
    infeasible.assignment = PartialAssignment(n);
    infeasible.prices.assign(n, 0);
    return infeasible;
  }

  const Instance work = cfg.artificial_pairs ? AddArtificialPairs(inst) : inst;
  const Value scale = cfg.scaling ? n + 1 : 1;
  const Instance scaled = work.Scaled(scale);

  PriceVector prices;
  switch (cfg.initial_prices) {
    case InitialPrices::kZero:
      prices.assign(n, 0);
      break;
    case InitialPrices::kMinValue:
      prices = MinValuePrices(scaled);
      break;
    case InitialPrices::kGiven:
      if (static_cast<int>(cfg.given_prices.size()) != n) {
        throw std::invalid_argument("given prices must have one entry per object");
      }
      prices = cfg.given_prices;
      break;
  }
  PartialAssignment asg = PartialAssignment::FromPairs(scaled, cfg.initial_assignment);

  std::vector<Value> schedule;
  if (cfg.algorithm == Algorithm::kConservative) {
    schedule = {0};
  } else if (cfg.scaling) {
    const Value eps0 = cfg.eps0 > 0 ? cfg.eps0 : DefaultEps0(ValueRange(scaled));
    schedule = EpsilonSchedule(std::max(eps0, cfg.eps_final), cfg.eps_final,
                               cfg.theta);
  } else {
    schedule = {cfg.eps};
  }
  const bool adaptive_possible = cfg.adaptive && (cfg.algorithm == Algorithm::kAggressive ||
                                                  cfg.algorithm == Algorithm::kCombined);

  SolveResult result;
  result.scale = scale;
  bool first = true;
  Value target = schedule.back();
  auto run = [&](Value eps, bool adaptive) {
    if (!first) {
      std::vector<std::pair<PersonIndex, ObjectIndex>> discarded;
      asg = RescaleAssignment(scaled, prices, asg, eps, &discarded);
      if (cfg.tracer != nullptr && cfg.tracer->enabled()) {
        cfg.tracer->set_phase_eps(eps);
        TraceRecord record;
        record.event = TraceEvent::kRescale;
        for (const auto& [i, j] : discarded) record.assignment.push_back({i, kNoObject});
        record.cardinality = asg.cardinality();
        cfg.tracer->Emit(std::move(record));
      }
      result.phases.emplace_back().discarded_pairs = static_cast<int>(discarded.size());
    } else {
      result.phases.emplace_back();
    }
    result.phases.back().eps = eps;
    SolveResult phase = RunPhase(scaled, cfg, eps, adaptive, first, std::move(prices),
                                 std::move(asg));
    first = false;
    prices = std::move(phase.prices);
    asg = std::move(phase.assignment);
    PhaseSummary& summary = result.phases.back();
    summary.status = phase.status;
    summary.counters = phase.counters;
    result.counters += phase.counters;
    result.status = phase.status;
    result.infeasibility = phase.infeasibility;
    result.epsilon_final = phase.epsilon_final;
    result.person_eps = std::move(phase.person_eps);
    return IsComplete(phase.status);
  };

  bool ok = true;
  for (const Value eps : schedule) {
    if (!(ok = run(eps, adaptive_possible))) break;
  }
  if (ok && result.epsilon_final > target) ok = run(target, false);

  if (ok) {
    result.status = static_cast<Value>(n) * result.epsilon_final < scale
                        ? SolveStatus::kOptimal
                        : SolveStatus::kComplete;
    if (cfg.artificial_pairs && UsesArtificialArc(inst, asg)) {
      result.status = SolveStatus::kInfeasible;
      result.infeasibility = InfeasibilityReason::kArtificialArc;
    }
  }
  result.primal_value = PrimalValue(work, asg);
  result.dual_cost = DualCost(scaled, prices);
  result.prices = std::move(prices);
  result.assignment = std::move(asg);
  return result;
}

}  // namespace coopauction

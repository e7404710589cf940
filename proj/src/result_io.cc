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

#include "coopauction/result_io.h"

#include <span>

#include "coopauction/duality.h"
#include "coopauction/epsilon.h"
#include "json.hpp"

namespace coopauction {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json CountersToJson(const Counters& c) {
  ordered_json out;
  out["iterations"] = c.iterations;
  out["bids"] = c.bids;
  out["coalition_builds"] = c.coalition_builds;
  out["node_visits"] = c.node_visits;
  out["price_rises"] = c.price_rises;
  out["augmentations"] = c.augmentations;
  out["expansions"] = c.expansions;
  out["reassignments"] = c.reassignments;
  return out;
}

}  // namespace

std::string ResultToJson(const SolveResult& result, const ResultMeta& meta,
                         int indent) {
  ordered_json doc;
  doc["schema"] = kResultSchema;
  doc["instance"] = meta.instance_name;
  doc["n"] = result.assignment.size();
  doc["algorithm"] = meta.algorithm;
  doc["scaling"] = meta.scaling;
  doc["scale"] = result.scale;
  doc["seed"] = meta.seed;
  doc["status"] = std::string(SolveStatusName(result.status));
  if (result.infeasibility != InfeasibilityReason::kNone) {
    doc["infeasibility"] = std::string(InfeasibilityReasonName(result.infeasibility));
  }
  doc["epsilon_final"] = result.epsilon_final;
  doc["primal_value"] = result.primal_value;
  doc["dual_cost"] = result.dual_cost;
  if (result.assignment.complete()) {
    doc["gap"] = result.dual_cost - result.primal_value * result.scale;
  } else {
    doc["gap"] = nullptr;
  }
  ordered_json pairs = ordered_json::array();
  for (const auto& [i, j] : result.assignment.Pairs()) pairs.push_back({i + 1, j + 1});
  doc["assignment"] = pairs;
  doc["prices"] = result.prices;
  if (!result.person_eps.empty()) doc["person_eps"] = result.person_eps;
  doc["counters"] = CountersToJson(result.counters);
  ordered_json phases = ordered_json::array();
  for (const PhaseSummary& p : result.phases) {
    ordered_json phase;
    phase["eps"] = p.eps;
    phase["discarded_pairs"] = p.discarded_pairs;
    phase["status"] = std::string(SolveStatusName(p.status));
    phase["counters"] = CountersToJson(p.counters);
    phases.push_back(phase);
  }
  doc["phases"] = phases;
  return doc.dump(indent);
}

VerifyReport VerifySolution(const Instance& scaled, const SolveResult& result) {
  VerifyReport report;
  const PartialAssignment& asg = result.assignment;
  const int n = scaled.size();
  if (asg.size() != n || static_cast<int>(result.prices.size()) != n) {
    report.problems.push_back("result size does not match the instance");
    return report;
  }
  for (PersonIndex i = 0; i < n; ++i) {
    const ObjectIndex j = asg.object_or_none(i);
    if (j == kNoObject) continue;
    if (asg.holder_or_none(j) != i) {
      report.problems.push_back("assignment maps are not inverse at person " +
                                std::to_string(i + 1));
    }
    if (!scaled.admissible(i, j)) {
      report.problems.push_back("pair (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") is not an arc");
    }
  }
  if (!report.ok()) return report;

  const EpsilonView eps = result.person_eps.empty()
                              ? EpsilonView(result.epsilon_final)
                              : EpsilonView(std::span<const Value>(result.person_eps));
  for (const EpsCsViolation& v : CheckEpsCs(scaled, result.prices, asg, eps).violations) {
    report.problems.push_back("eps-CS violated at (" + std::to_string(v.person + 1) +
                              "," + std::to_string(v.object + 1) + ") by " +
                              std::to_string(v.deficit));
  }
  if (IsComplete(result.status)) {
    if (!asg.complete()) {
      report.problems.push_back("status is complete but the assignment is not");
      return report;
    }
    const Value gap = DualityGap(scaled, result.prices, asg);
    const Value bound = static_cast<Value>(n) * eps.max();
    if (gap < 0 || gap > bound) {
      report.problems.push_back("duality gap " + std::to_string(gap) +
                                " outside [0, " + std::to_string(bound) + "]");
    }
  }
  return report;
}

}  // namespace coopauction

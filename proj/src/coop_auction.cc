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

#include "coopauction/coop_auction.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "coopauction/duality.h"
#include "coopauction/noncoop_auction.h"

namespace coopauction {
namespace {

void Emit(AuctionState& state, IterationContext& ctx, TraceRecord record) {
  if (!state.journaling() || ctx.tracer == nullptr) return;
  state.DrainJournal(record);
  ctx.tracer->Emit(std::move(record));
}

TraceRecord CoalitionRecord(TraceEvent event, const Coalition& c, Value r) {
  TraceRecord record;
  record.event = event;
  record.person = c.root();
  record.coalition_size = static_cast<int>(c.members().size());
  record.coalition_objects = static_cast<int>(c.objects().size());
  const CoalitionSnapshot snap = c.Snapshot();
  record.border_size = static_cast<int>(snap.border.size());
  record.increment = r;
  return record;
}

// Snapshots are not free, so only build the record when tracing.
void EmitCoalition(AuctionState& state, IterationContext& ctx, TraceEvent event,
                   const Coalition& c, Value r) {
  if (!state.journaling() || ctx.tracer == nullptr) return;
  Emit(state, ctx, CoalitionRecord(event, c, r));
}

TraceRecord PathRecord(TraceEvent event, const AlternatingPath& path,
                       Value increment) {
  TraceRecord record;
  record.event = event;
  record.person = path.persons.front();
  record.object = path.objects.back();
  record.path_length = static_cast<int>(path.persons.size());
  record.increment = increment;
  return record;
}

IterationOutcome SinglePersonBid(const Instance& inst, AuctionState& state,
                                 PersonIndex i, EpsilonView eps,
                                 IterationContext& ctx) {
  const BidComputation bid = eps(i) == 0 ? ConservativeBid(inst, state, i)
                                         : AggressiveBid(inst, state, i, eps(i));
  ++ctx.counters->bids;
  TraceRecord record;
  record.event = TraceEvent::kBid;
  record.person = i;
  record.object = bid.best_object;
  record.increment = bid.increment;
  Emit(state, ctx, std::move(record));
  return {IterationKind::kBid, bid.displaced};
}

// Blocked coalition: raise, then report what entered the zones. The rise is
// written to the state before returning.
std::vector<EnteringObject> RiseAndProbe(AuctionState& state, Coalition& c,
                                         IterationContext& ctx) {
  const Value r = c.rise();
  EmitCoalition(state, ctx, TraceEvent::kCoalition, c, r);
  c.Raise(r);
  c.Materialize();
  ++ctx.counters->price_rises;
  EmitCoalition(state, ctx, TraceEvent::kRise, c, r);
  std::vector<EnteringObject> entering = c.EnteringObjects();
  if (entering.empty()) throw std::logic_error("rise brought no new objects");
  return entering;
}

const EnteringObject& SelectEntering(const std::vector<EnteringObject>& entering) {
  for (const EnteringObject& e : entering) {
    if (e.holder == kNoPerson) return e;
  }
  return entering.front();
}

bool AllAssigned(const std::vector<EnteringObject>& entering) {
  for (const EnteringObject& e : entering) {
    if (e.holder == kNoPerson) return false;
  }
  return true;
}

bool SingletonZone(const Instance& inst, const AuctionState& state,
                   PersonIndex i, EpsilonView eps) {
  return EpsZone(inst, state.prices(), i, eps(i)).size() == 1;
}

}  // namespace

std::string_view CoopVariantName(CoopVariant variant) {
  switch (variant) {
    case CoopVariant::kPurely:
      return "cooperative";
    case CoopVariant::kExpanding:
      return "expanding";
    case CoopVariant::kCombined:
      return "combined";
    case CoopVariant::kReassign:
      return "reassign";
  }
  return "cooperative";
}

IterationOutcome CooperativeIteration(const Instance& inst, AuctionState& state,
                                      PersonIndex i, EpsilonView eps,
                                      IterationContext& ctx) {
  Coalition c(inst, state, i, eps, ctx.removal_rule, &ctx.counters->node_visits);
  ++ctx.counters->coalition_builds;
  switch (c.Grow()) {
    case CoalitionOutcome::kAugmentingPath: {
      const Value inc = AugmentAndRaise(inst, state, c.path(), eps);
      ++ctx.counters->augmentations;
      Emit(state, ctx, PathRecord(TraceEvent::kAugmentation, c.path(), inc));
      return {IterationKind::kAugmented, kNoPerson};
    }
    case CoalitionOutcome::kEmptyBorder:
      return {IterationKind::kInfeasible, kNoPerson};
    default:
      break;
  }
  const std::vector<EnteringObject> entering = RiseAndProbe(state, c, ctx);
  if (AllAssigned(entering)) ++ctx.counters->expansions;
  return {IterationKind::kRaised, kNoPerson};
}

IterationOutcome ExpandingIteration(const Instance& inst, AuctionState& state,
                                    PersonIndex i, EpsilonView eps,
                                    IterationContext& ctx) {
  Coalition c(inst, state, i, eps, ctx.removal_rule, &ctx.counters->node_visits);
  ++ctx.counters->coalition_builds;
  const bool eager = state.journaling();
  for (;;) {
    const CoalitionOutcome outcome = c.Grow();
    if (outcome == CoalitionOutcome::kAugmentingPath) {
      c.Materialize();
      Augment(inst, state, c.path(), eps);
      ++ctx.counters->augmentations;
      Emit(state, ctx, PathRecord(TraceEvent::kAugmentation, c.path(), 0));
      return {IterationKind::kAugmented, kNoPerson};
    }
    if (outcome == CoalitionOutcome::kEmptyBorder) {
      c.Materialize();
      return {IterationKind::kInfeasible, kNoPerson};
    }
    const Value r = c.rise();
    EmitCoalition(state, ctx, TraceEvent::kCoalition, c, r);
    c.Raise(r);
    ++ctx.counters->price_rises;
    if (eager) {
      c.Materialize();
      EmitCoalition(state, ctx, TraceEvent::kRise, c, r);
    }
    const std::vector<EnteringObject> entering = c.EnteringObjects();
    if (entering.empty()) throw std::logic_error("rise brought no new objects");
    const EnteringObject& chosen = SelectEntering(entering);
    if (chosen.holder == kNoPerson) {
      const AlternatingPath path = c.PathTo(chosen.receiver, chosen.object);
      c.Materialize();
      Augment(inst, state, path, eps);
      ++ctx.counters->augmentations;
      Emit(state, ctx, PathRecord(TraceEvent::kAugmentation, path, 0));
      return {IterationKind::kAugmented, kNoPerson};
    }
    c.Absorb(entering);
    ++ctx.counters->expansions;
    EmitCoalition(state, ctx, TraceEvent::kExpansion, c, r);
  }
}

IterationOutcome CombinedIteration(const Instance& inst, AuctionState& state,
                                   PersonIndex i, EpsilonView eps,
                                   bool expanding, IterationContext& ctx) {
  if (SingletonZone(inst, state, i, eps)) {
    return SinglePersonBid(inst, state, i, eps, ctx);
  }
  return expanding ? ExpandingIteration(inst, state, i, eps, ctx)
                   : CooperativeIteration(inst, state, i, eps, ctx);
}

IterationOutcome ReassignmentIteration(const Instance& inst, AuctionState& state,
                                       PersonIndex i, EpsilonView eps,
                                       IterationContext& ctx) {
  if (SingletonZone(inst, state, i, eps)) {
    return SinglePersonBid(inst, state, i, eps, ctx);
  }
  Coalition c(inst, state, i, eps, ctx.removal_rule, &ctx.counters->node_visits);
  ++ctx.counters->coalition_builds;
  switch (c.Grow()) {
    case CoalitionOutcome::kAugmentingPath: {
      const Value inc = AugmentAndRaise(inst, state, c.path(), eps);
      ++ctx.counters->augmentations;
      Emit(state, ctx, PathRecord(TraceEvent::kAugmentation, c.path(), inc));
      return {IterationKind::kAugmented, kNoPerson};
    }
    case CoalitionOutcome::kEmptyBorder:
      return {IterationKind::kInfeasible, kNoPerson};
    default:
      break;
  }
  const std::vector<EnteringObject> entering = RiseAndProbe(state, c, ctx);
  const EnteringObject& chosen = SelectEntering(entering);
  const AlternatingPath path = c.PathTo(chosen.receiver, chosen.object);
  if (chosen.holder == kNoPerson) {
    const Value inc = AugmentAndRaise(inst, state, path, eps);
    ++ctx.counters->augmentations;
    Emit(state, ctx, PathRecord(TraceEvent::kAugmentation, path, inc));
    return {IterationKind::kAugmented, kNoPerson};
  }
  state.Unassign(chosen.holder);
  const Value inc = AugmentAndRaise(inst, state, path, eps);
  ++ctx.counters->reassignments;
  Emit(state, ctx, PathRecord(TraceEvent::kReassignment, path, inc));
  return {IterationKind::kReassigned, chosen.holder};
}

SolveResult RunCoop(const Instance& inst, const CoopConfig& config,
                    PriceVector p0, PartialAssignment asg0) {
  const int n = inst.size();
  const Value eps = config.eps;
  if (eps < 0) throw std::invalid_argument("epsilon must be non-negative");
  CheckStartState(inst, p0, asg0, eps);

  const bool adaptive =
      config.adaptive && eps > 0 && config.variant == CoopVariant::kCombined;
  PersonEpsilon person_eps(n, eps);
  std::vector<char> has_bid(n, 0);

  const Value range = ValueRange(inst);
  AuctionState state(std::move(p0), std::move(asg0));
  if (config.price_guard) {
    const Value top_eps = adaptive ? std::max(eps, config.adaptive_rule.cap) : eps;
    state.set_price_ceiling(PriceCeiling(state.prices(), range, top_eps));
  }
  Tracer* tracer = config.tracer;
  if (tracer != nullptr && tracer->enabled()) {
    state.set_journaling(true);
    tracer->set_phase_eps(eps);
    if (config.trace_start) tracer->Emit(StartRecord(state));
  }
  const std::int64_t cap = config.max_iterations > 0
                               ? config.max_iterations
                               : DefaultIterationCap(n, range, eps);
  const std::int64_t stall_window =
      config.stall_window > 0 ? config.stall_window
                              : static_cast<std::int64_t>(n) * n;

  SolveResult result;
  result.epsilon_final = eps;
  IterationContext ctx{&result.counters, tracer, config.removal_rule};
  PersonQueue queue(config.person_order, state.assignment());
  std::int64_t idle = 0;
  SolveStatus status = SolveStatus::kComplete;
  while (!queue.empty()) {
    if (result.counters.iterations >= cap) {
      status = SolveStatus::kIterationLimit;
      break;
    }
    const PersonIndex i = queue.Pop();
    const long long changes_before = state.price_changes();
    const int cardinality_before = state.assignment().cardinality();
    const EpsilonView view = adaptive ? person_eps.view() : EpsilonView(eps);

    IterationOutcome out;
    switch (config.variant) {
      case CoopVariant::kPurely:
        out = CooperativeIteration(inst, state, i, view, ctx);
        break;
      case CoopVariant::kExpanding:
        out = ExpandingIteration(inst, state, i, view, ctx);
        break;
      case CoopVariant::kCombined:
        out = CombinedIteration(inst, state, i, view, config.combined_expanding, ctx);
        break;
      case CoopVariant::kReassign:
        out = ReassignmentIteration(inst, state, i, view, ctx);
        break;
    }
    ++result.counters.iterations;
    if (out.kind == IterationKind::kBid && adaptive) {
      if (has_bid[i]) AdaptiveUpdate(person_eps, i, config.adaptive_rule);
      has_bid[i] = 1;
    }
    if (config.after_iteration) {
      config.after_iteration(state, adaptive ? person_eps.view() : EpsilonView(eps));
    }
    if (out.kind == IterationKind::kInfeasible) {
      status = SolveStatus::kInfeasible;
      result.infeasibility = InfeasibilityReason::kEmptyBorder;
      break;
    }
    if (out.kind == IterationKind::kRaised) queue.Push(i);
    if (out.displaced != kNoPerson) queue.Push(out.displaced);
    if (state.ceiling_breached()) {
      status = SolveStatus::kInfeasible;
      result.infeasibility = InfeasibilityReason::kPriceGuard;
      break;
    }
    const bool progress = state.price_changes() != changes_before ||
                          state.assignment().cardinality() != cardinality_before;
    idle = progress ? 0 : idle + 1;
    if (idle >= stall_window) {
      status = SolveStatus::kStalled;
      break;
    }
  }

  result.status = status;
  if (adaptive) {
    result.person_eps.assign(person_eps.values().begin(), person_eps.values().end());
    result.epsilon_final = person_eps.max();
  }
  result.primal_value = PrimalValue(inst, state.assignment());
  result.dual_cost = DualCost(inst, state.prices());
  result.prices = std::move(state).TakePrices();
  result.assignment = std::move(state).TakeAssignment();
  return result;
}

}  // namespace coopauction

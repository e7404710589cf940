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

#ifndef COOPAUCTION_TRACE_H_
#define COOPAUCTION_TRACE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coopauction/assignment.h"
#include "coopauction/types.h"

namespace coopauction {

enum class TraceEvent {
  kStart,         // full initial state of a solve
  kBid,           // single-person bid
  kCoalition,     // a coalition was found blocked (no state change)
  kRise,          // common price rise of the coalition objects
  kExpansion,     // coalition absorbed new objects after a rise
  kAugmentation,  // augmentation along an augmenting path
  kReassignment,  // collective bid that displaced an outside person
  kRescale,       // epsilon phase change, pairs discarded
};

std::string_view TraceEventName(TraceEvent event);
std::optional<TraceEvent> ParseTraceEventName(std::string_view name);

struct PriceChange {
  ObjectIndex object;
  Value price;  // new absolute price
  friend bool operator==(const PriceChange&, const PriceChange&) = default;
};

// object == kNoObject records an unassignment.
struct AssignmentChange {
  PersonIndex person;
  ObjectIndex object;
  friend bool operator==(const AssignmentChange&,
                         const AssignmentChange&) = default;
};

// One line of a trace. Price and assignment changes are listed in the order
// they were applied, so replaying them reproduces the solver state exactly.
struct TraceRecord {
  std::int64_t seq = 0;
  Value phase_eps = 0;
  TraceEvent event = TraceEvent::kStart;

  PersonIndex person = kNoPerson;  // bidder, or root of the coalition
  ObjectIndex object = kNoObject;  // bid object, or last object of a path
  Value increment = 0;             // bid increment or common rise r
  int coalition_size = 0;
  int coalition_objects = 0;
  int border_size = 0;
  int path_length = 0;  // persons on the path
  int cardinality = 0;  // after the event
  int n = 0;            // start records only

  std::vector<PriceChange> prices;
  std::vector<AssignmentChange> assignment;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void Record(const TraceRecord& record) = 0;
};

// Keeps every record in memory.
class TraceLog : public TraceSink {
 public:
  void Record(const TraceRecord& record) override { records_.push_back(record); }
  const std::vector<TraceRecord>& records() const { return records_; }

 private:
  std::vector<TraceRecord> records_;
};

// Writes one JSON object per line.
class JsonlTraceWriter : public TraceSink {
 public:
  explicit JsonlTraceWriter(std::ostream& out) : out_(out) {}
  void Record(const TraceRecord& record) override;

 private:
  std::ostream& out_;
};

// Numbers records and stamps the current phase epsilon. A default-constructed
// tracer is disabled and costs one branch per event.
class Tracer {
 public:
  Tracer() = default;
  explicit Tracer(TraceSink* sink) : sink_(sink) {}

  bool enabled() const { return sink_ != nullptr; }
  void set_phase_eps(Value eps) { phase_eps_ = eps; }
  void Emit(TraceRecord record);

 private:
  TraceSink* sink_ = nullptr;
  std::int64_t next_seq_ = 0;
  Value phase_eps_ = 0;
};

std::string TraceRecordToJson(const TraceRecord& record);
TraceRecord TraceRecordFromJson(std::string_view line);  // throws on bad input
std::vector<TraceRecord> ReadTrace(std::istream& in);

struct ReplayedState {
  PriceVector prices;
  PartialAssignment assignment;
  std::vector<TraceRecord> discarded_by_rescale;
};

// Rebuilds the final prices and assignment from a trace that begins with a
// start record. Uses only the recorded changes, never the solver.
ReplayedState ReplayTrace(const std::vector<TraceRecord>& records);

}  // namespace coopauction

#endif  // COOPAUCTION_TRACE_H_

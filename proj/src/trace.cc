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

#include "coopauction/trace.h"

#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace coopauction {
namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<TraceEvent, std::string_view>, 8> kEventNames = {{
    {TraceEvent::kStart, "start"},
    {TraceEvent::kBid, "bid"},
    {TraceEvent::kCoalition, "coalition"},
    {TraceEvent::kRise, "rise"},
    {TraceEvent::kExpansion, "expansion"},
    {TraceEvent::kAugmentation, "augmentation"},
    {TraceEvent::kReassignment, "reassignment"},
    {TraceEvent::kRescale, "rescale"},
}};

// Indices are written 1-based; a missing person or object becomes null.
json IndexToJson(std::int32_t index) {
  if (index < 0) return nullptr;
  return index + 1;
}

std::int32_t IndexFromJson(const json& value) {
  if (value.is_null()) return -1;
  return value.get<std::int32_t>() - 1;
}

json Payload(const TraceRecord& r) {
  json payload = json::object();
  switch (r.event) {
    case TraceEvent::kStart:
      payload["n"] = r.n;
      payload["cardinality"] = r.cardinality;
      break;
    case TraceEvent::kBid:
      payload["bidder"] = IndexToJson(r.person);
      payload["object"] = IndexToJson(r.object);
      payload["increment"] = r.increment;
      payload["cardinality"] = r.cardinality;
      break;
    case TraceEvent::kCoalition:
    case TraceEvent::kRise:
    case TraceEvent::kExpansion:
      payload["root"] = IndexToJson(r.person);
      payload["coalition_size"] = r.coalition_size;
      payload["coalition_objects"] = r.coalition_objects;
      payload["border_size"] = r.border_size;
      payload["r"] = r.increment;
      break;
    case TraceEvent::kAugmentation:
    case TraceEvent::kReassignment:
      payload["root"] = IndexToJson(r.person);
      payload["object"] = IndexToJson(r.object);
      payload["path_length"] = r.path_length;
      payload["increment"] = r.increment;
      payload["cardinality"] = r.cardinality;
      break;
    case TraceEvent::kRescale:
      payload["discarded"] = static_cast<int>(r.assignment.size());
      payload["cardinality"] = r.cardinality;
      break;
  }
  return payload;
}

template <typename T>
T Field(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  return it->get<T>();
}

}  // namespace

std::string_view TraceEventName(TraceEvent event) {
  for (const auto& [e, name] : kEventNames) {
    if (e == event) return name;
  }
  return "unknown";
}

std::optional<TraceEvent> ParseTraceEventName(std::string_view name) {
  for (const auto& [e, n] : kEventNames) {
    if (n == name) return e;
  }
  return std::nullopt;
}

void Tracer::Emit(TraceRecord record) {
  if (sink_ == nullptr) return;
  record.seq = next_seq_++;
  record.phase_eps = phase_eps_;
  sink_->Record(record);
}

std::string TraceRecordToJson(const TraceRecord& r) {
  // ordered_json keeps insertion order, so the output is stable.
  json out;
  out["seq"] = r.seq;
  out["phase_eps"] = r.phase_eps;
  out["event"] = std::string(TraceEventName(r.event));
  out["payload"] = Payload(r);
  json prices = json::array();
  for (const PriceChange& c : r.prices) {
    prices.push_back({c.object + 1, c.price});
  }
  out["prices"] = prices;
  json assign = json::array();
  for (const AssignmentChange& c : r.assignment) {
    assign.push_back({c.person + 1, IndexToJson(c.object)});
  }
  out["assign"] = assign;
  return out.dump();
}

TraceRecord TraceRecordFromJson(std::string_view line) {
  const json in = json::parse(line);
  TraceRecord r;
  r.seq = in.at("seq").get<std::int64_t>();
  r.phase_eps = in.at("phase_eps").get<Value>();
  const auto event = ParseTraceEventName(in.at("event").get<std::string>());
  if (!event) throw std::runtime_error("unknown trace event");
  r.event = *event;

  const json& p = in.at("payload");
  r.n = Field<int>(p, "n", 0);
  r.cardinality = Field<int>(p, "cardinality", 0);
  r.coalition_size = Field<int>(p, "coalition_size", 0);
  r.coalition_objects = Field<int>(p, "coalition_objects", 0);
  r.border_size = Field<int>(p, "border_size", 0);
  r.path_length = Field<int>(p, "path_length", 0);
  r.increment = Field<Value>(p, "increment", Field<Value>(p, "r", 0));
  if (p.contains("bidder")) r.person = IndexFromJson(p["bidder"]);
  if (p.contains("root")) r.person = IndexFromJson(p["root"]);
  if (p.contains("object")) r.object = IndexFromJson(p["object"]);

  for (const json& c : in.at("prices")) {
    r.prices.push_back({c.at(0).get<ObjectIndex>() - 1, c.at(1).get<Value>()});
  }
  for (const json& c : in.at("assign")) {
    r.assignment.push_back({c.at(0).get<PersonIndex>() - 1, IndexFromJson(c.at(1))});
  }
  return r;
}

void JsonlTraceWriter::Record(const TraceRecord& record) {
  out_ << TraceRecordToJson(record) << '\n';
}

std::vector<TraceRecord> ReadTrace(std::istream& in) {
  std::vector<TraceRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(TraceRecordFromJson(line));
  }
  return records;
}

ReplayedState ReplayTrace(const std::vector<TraceRecord>& records) {
  if (records.empty() || records.front().event != TraceEvent::kStart) {
    throw std::runtime_error("trace must begin with a start record");
  }
  std::int64_t last_seq = -1;
  ReplayedState state;
  for (const TraceRecord& r : records) {
    if (r.seq <= last_seq) throw std::runtime_error("trace seq not increasing");
    last_seq = r.seq;
    if (r.event == TraceEvent::kStart) {
      // A trace may hold several solves back to back; each start resets.
      state.prices.assign(r.n, 0);
      state.assignment = PartialAssignment(r.n);
    }
    for (const PriceChange& c : r.prices) state.prices.at(c.object) = c.price;
    for (const AssignmentChange& c : r.assignment) {
      if (c.object == kNoObject) {
        state.assignment.Unassign(c.person);
      } else {
        state.assignment.Assign(c.person, c.object);
      }
    }
    if (r.event == TraceEvent::kRescale) state.discarded_by_rescale.push_back(r);
  }
  return state;
}

}  // namespace coopauction

//  Copyright 2026 The Latticeflow Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latticeflow/trace.hpp"

namespace latticeflow {

std::string_view to_string(TraceEventType type) {
  switch (type) {
    case TraceEventType::Update:
      return "update";
    case TraceEventType::Send:
      return "send";
    case TraceEventType::Drop:
      return "drop";
    case TraceEventType::Dup:
      return "dup";
    case TraceEventType::Deliver:
      return "deliver";
    case TraceEventType::Alert:
      return "alert";
    case TraceEventType::Converge:
      return "converge";
  }
  return "?";
}

Json to_json(const TraceEvent& e) {
  Json out;
  out["round"] = e.round;
  out["node"] = e.node.id;
  out["event"] = std::string(to_string(e.type));
  for (const auto& [key, value] : e.detail.items()) out[key] = value;
  return out;
}

std::string to_jsonl(const std::vector<TraceEvent>& events) {
  std::string out;
  for (const TraceEvent& e : events) {
    out += to_json(e).dump();
    out += '\n';
  }
  return out;
}

}  // namespace latticeflow

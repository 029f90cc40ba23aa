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

#ifndef LATTICEFLOW_TRACE_HPP_
#define LATTICEFLOW_TRACE_HPP_

#include <string>
#include <vector>

#include "latticeflow/replica_id.hpp"
#include "latticeflow/serialize.hpp"

namespace latticeflow {

enum class TraceEventType { Update, Send, Drop, Dup, Deliver, Alert, Converge };

std::string_view to_string(TraceEventType type);

// One structured record per simulator event. `detail` carries event-specific
// fields in a fixed insertion order so traces are byte-stable.
struct TraceEvent {
  int round = 0;
  ReplicaId node;
  TraceEventType type = TraceEventType::Update;
  Json detail;
};

Json to_json(const TraceEvent& e);

// Line-delimited structured text: one compact JSON record per line.
std::string to_jsonl(const std::vector<TraceEvent>& events);

}  // namespace latticeflow

#endif  // LATTICEFLOW_TRACE_HPP_

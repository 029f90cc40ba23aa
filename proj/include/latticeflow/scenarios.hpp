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

#ifndef LATTICEFLOW_SCENARIOS_HPP_
#define LATTICEFLOW_SCENARIOS_HPP_

#include <optional>
#include <string>

#include "latticeflow/scenario_config.hpp"
#include "latticeflow/sim.hpp"

namespace latticeflow {

// Fridge-fleet outcome: every node runs the shared graph
//   readings = input(orset)            elements: pair(node name, temp)
//   alerts   = filter(second_gt(T), readings)
// and each node's alert set must equal the filter of its merged readings —
// in particular a node alerts on its own over-threshold reading in the same
// round, connected or not.
struct AlertLatency {
  ReplicaId node;
  int reading_round = 0;
  double temp_celsius = 0.0;
  int latency_rounds = -1;  // -1: the node never alerted on this reading
};

struct FridgeReport {
  double threshold_celsius = 0.0;
  // First sighting of each alert element, per node, in round order.
  std::map<ReplicaId, std::vector<std::pair<int, Element>>> alert_events;
  std::map<ReplicaId, std::set<Element>> final_alerts;
  std::vector<AlertLatency> latencies;  // one per over-threshold reading
  // First round after which every node's alert set equals the common final
  // set; -1 when the sets never agree.
  int alert_convergence_round = -1;
};

struct ScenarioResult {
  SimReport sim;
  std::vector<TraceEvent> trace;
  std::optional<FridgeReport> fridge;
};

// Translates a parsed scenario into a simulator configuration. Exposed so
// tests can drive the simulator with scenario-equivalent configs directly.
SimConfig build_sim_config(const ScenarioConfig& cfg);

ScenarioResult run_scenario(const ScenarioConfig& cfg);

// Deterministic renderings: identical config + seed gives identical bytes.
std::string render_text(const ScenarioConfig& cfg, const ScenarioResult& result);
Json render_json(const ScenarioConfig& cfg, const ScenarioResult& result);

}  // namespace latticeflow

#endif  // LATTICEFLOW_SCENARIOS_HPP_

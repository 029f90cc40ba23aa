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

#ifndef LATTICEFLOW_SCENARIO_CONFIG_HPP_
#define LATTICEFLOW_SCENARIO_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latticeflow/dataflow_graph.hpp"
#include "latticeflow/sim.hpp"

namespace latticeflow {

// Flat `key = value` text with repeatable [section] tables; grammar in the
// README. Two scenario kinds:
//   fridge — fixed graph (readings orset -> alerts filter) driven by
//            [reading] tables against threshold_celsius
//   gossip — generic: [var]/[derived] declare the graph, [update] scripts
//            mutations, [watch] marks alert-emitting variables
struct ReadingSpec {
  int round = 0;
  ReplicaId node;
  double temp_celsius = 0.0;
};

struct PartitionDecl {
  int from_round = 0;
  int to_round = 0;
  std::vector<ReplicaId> side_a;
  std::vector<ReplicaId> side_b;  // empty means "complement of side_a"
};

struct VarDecl {
  VarId name;
  LatticeKind kind = LatticeKind::OrSet;
};

struct DerivedDecl {
  VarId name;
  DfOp op = DfOp::Map;
  std::string fn_id;
  std::vector<VarId> inputs;
};

struct UpdateDecl {
  int round = 0;
  ReplicaId node;
  VarId var;
  std::string action;  // inc | dec | add | remove | set
  std::uint64_t amount = 1;
  std::optional<Element> value;
};

struct ScenarioConfig {
  std::string scenario;  // "fridge" | "gossip"
  int nodes = 1;
  std::uint64_t seed = 0;
  double drop_prob = 0.0;
  double dup_prob = 0.0;
  int max_delay_rounds = 0;
  int fanout = 1;
  int max_rounds = 50;
  std::vector<PartitionDecl> partitions;

  // fridge
  double threshold_celsius = 8.0;
  std::vector<ReadingSpec> readings;

  // gossip
  std::vector<VarDecl> vars;
  std::vector<DerivedDecl> derived;
  std::vector<UpdateDecl> updates;
  std::vector<VarId> watches;

  // Node ids: A, B, C, ... in declaration order.
  std::vector<ReplicaId> node_ids() const;

  static ScenarioConfig parse(const std::string& text);
  static ScenarioConfig parse_file(const std::string& path);
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_SCENARIO_CONFIG_HPP_

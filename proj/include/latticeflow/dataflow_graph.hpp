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

#ifndef LATTICEFLOW_DATAFLOW_GRAPH_HPP_
#define LATTICEFLOW_DATAFLOW_GRAPH_HPP_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "latticeflow/dataflow.hpp"
#include "latticeflow/lattice_value.hpp"

namespace latticeflow {

struct VarId {
  std::string name;

  VarId() = default;
  explicit VarId(std::string n) : name(std::move(n)) {}

  auto operator<=>(const VarId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const VarId& v) {
  return os << v.name;
}

enum class DfOp { Map, Filter, Union, Intersection, Product, FoldSum, FoldCount };

std::string_view to_string(DfOp op);

struct InputSpec {
  LatticeKind kind = LatticeKind::OrSet;

  bool operator==(const InputSpec&) const = default;
};

struct DerivedSpec {
  DfOp op = DfOp::Map;
  std::string fn_id;           // Map / Filter only
  std::vector<VarId> inputs;   // arity checked at declare

  bool operator==(const DerivedSpec&) const = default;
};

struct NodeSpec {
  std::variant<InputSpec, DerivedSpec> spec;

  NodeSpec() : spec(InputSpec{}) {}
  NodeSpec(InputSpec s) : spec(s) {}
  NodeSpec(DerivedSpec s) : spec(std::move(s)) {}

  bool is_input() const { return std::holds_alternative<InputSpec>(spec); }
  const InputSpec& input() const { return std::get<InputSpec>(spec); }
  const DerivedSpec& derived() const { return std::get<DerivedSpec>(spec); }

  bool operator==(const NodeSpec&) const = default;
};

// A DAG of input variables and derived variables, each derived one a
// materialized view recomputed in topological order on propagate. Correctness
// is recompute equivalence: after propagate, every derived variable's stored
// value equals its recomputation from the inputs. A graph instance is
// single-owner; cross-replica concurrency enters only through merge_var.
class DataflowGraph {
 public:
  explicit DataflowGraph(ReplicaId owner) : owner_(std::move(owner)) {}

  // Builds a graph from a full node-spec map (validates and orders it).
  static DataflowGraph from_nodes(ReplicaId owner,
                                  const std::map<VarId, NodeSpec>& nodes);

  const ReplicaId& owner() const { return owner_; }

  void declare_input(const VarId& id, LatticeKind kind);
  void declare_derived(const VarId& id, DfOp op, std::string fn_id,
                       std::vector<VarId> inputs);
  void declare(const VarId& id, const NodeSpec& spec);

  // Applies a local mutation to an input variable on behalf of the owner.
  void update(const VarId& id, const Mutation& m);

  // Joins remote state into a local input. Throws for derived variables and
  // on a variant mismatch.
  void merge_var(const VarId& id, const LatticeValue& remote);

  const LatticeValue& read(const VarId& id) const;

  // Recomputes every derived variable in topological order. A pure function
  // of (nodes, input store): propagating twice changes nothing.
  void propagate();

  const std::map<VarId, NodeSpec>& nodes() const { return nodes_; }
  const std::map<VarId, LatticeValue>& store() const { return store_; }
  std::map<VarId, LatticeValue> input_store() const;

  // Value kind a node carries: inputs their declared kind; set operators
  // produce orsets; folds produce registers.
  LatticeKind value_kind(const VarId& id) const;

  // Deterministic text form, one node per line in name order, e.g.
  //   alerts = filter(second_gt(8.0), readings)
  //   readings = input(orset)
  std::string spec_text() const;
  static std::map<VarId, NodeSpec> parse_spec_text(const std::string& text);

  // Validates a spec map: existing inputs, arities, kinds, acyclicity.
  // Returns a topological evaluation order. Throws on violations.
  static std::vector<VarId> validate_nodes(const std::map<VarId, NodeSpec>& nodes);

 private:
  const NodeSpec& node_at(const VarId& id) const;
  LatticeValue recompute(const VarId& id, const DerivedSpec& spec) const;

  ReplicaId owner_;
  std::map<VarId, NodeSpec> nodes_;
  std::map<VarId, LatticeValue> store_;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_DATAFLOW_GRAPH_HPP_

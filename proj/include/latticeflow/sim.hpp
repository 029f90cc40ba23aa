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

#ifndef LATTICEFLOW_SIM_HPP_
#define LATTICEFLOW_SIM_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "latticeflow/dataflow_graph.hpp"
#include "latticeflow/network.hpp"
#include "latticeflow/rng.hpp"
#include "latticeflow/trace.hpp"

namespace latticeflow {

// Full state of one gossip exchange half. Payloads carry input variables
// only; derived state is recomputed locally by the receiver.
struct MessageEnvelope {
  ReplicaId src;
  ReplicaId dst;
  int deliver_at_round = 0;
  bool expects_reply = false;  // push half of a push-pull exchange
  std::uint64_t enqueue_index = 0;
  std::map<VarId, LatticeValue> payload;
};

struct ScriptedUpdate {
  int round = 0;
  ReplicaId node;
  VarId var;
  Mutation mutation;
};

struct SimConfig {
  std::vector<ReplicaId> node_ids;
  std::map<VarId, NodeSpec> graph_nodes;  // shared by every node
  NetworkModel net;
  int fanout = 1;
  std::uint64_t seed = 0;
  std::vector<ScriptedUpdate> updates;
  std::vector<VarId> watches;  // derived orset vars that emit alert events
  int max_rounds = 50;

  void validate() const;  // throws std::invalid_argument
};

struct SimNode {
  ReplicaId id;
  DataflowGraph graph;
  bool alive = true;
  // Elements already reported per watched variable.
  std::map<VarId, std::set<Element>> watch_seen;
};

struct SimReport {
  bool converged = false;
  int rounds = 0;
  int converged_at_round = -1;
  std::uint64_t messages_sent = 0;
  std::uint64_t dropped = 0;
  std::uint64_t duplicated = 0;
  std::uint64_t delivered = 0;
  std::map<ReplicaId, std::map<VarId, LatticeValue>> final_stores;
};

// Deterministic discrete-round epidemic simulator: every alive node pushes
// its input state to `fanout` random peers each round; a delivered push
// triggers a pull reply carrying the receiver's (just merged) inputs. The
// network drops, duplicates, delays, and partitions envelopes. Given
// (config, seed) the run — including the trace — is byte-reproducible.
//
// Round r executes as:
//   1. scripted updates for r are applied at their owners (then propagate)
//   2. every alive node enqueues push envelopes to fanout distinct peers
//   3. each envelope is admitted: partition check at the sending round, drop
//      draw, dup draw, then a delay draw per copy; delivery round is
//      r + uniform(1, 1 + max_delay_rounds)
//   4. envelopes due at r+1 are applied via merge + propagate in
//      (dst, src, enqueue index) order; pushes enqueue their pull replies
//   5. the round counter becomes r+1
class Simulation {
 public:
  explicit Simulation(SimConfig config);

  void step();

  // True iff all alive nodes hold structurally equal stores (inputs and
  // derived) and no undelivered envelope would change any store.
  bool converged() const;

  // Steps until converged (with no scripted updates still pending) or until
  // max_rounds steps have run. Emits a `converge` trace event on success.
  SimReport run();

  int round() const { return round_; }
  const std::vector<SimNode>& sim_nodes() const { return nodes_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  const std::vector<MessageEnvelope>& delivered_log() const {
    return delivered_log_;
  }
  const std::vector<MessageEnvelope>& in_flight() const { return in_flight_; }

  // Merges an envelope's payload into the destination graph and propagates.
  // Shared with replay checks, which re-apply delivered logs out of band.
  static void apply_envelope(SimNode& node, const MessageEnvelope& env);

 private:
  void apply_scripted_updates();
  void enqueue_pushes();
  void admit(MessageEnvelope env, int base_round);
  void deliver_due(int new_round);
  void check_watches(SimNode& node, int event_round);
  SimNode& node_of(const ReplicaId& id);

  SimConfig config_;
  int round_ = 0;
  std::vector<SimNode> nodes_;
  std::vector<MessageEnvelope> in_flight_;
  std::vector<MessageEnvelope> delivered_log_;
  std::vector<TraceEvent> trace_;
  Rng rng_;
  std::uint64_t next_enqueue_index_ = 0;
  std::uint64_t messages_sent_ = 0;
  std::uint64_t dropped_ = 0;
  std::uint64_t duplicated_ = 0;
  std::uint64_t delivered_ = 0;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_SIM_HPP_

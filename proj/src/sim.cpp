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

#include "latticeflow/sim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latticeflow {

namespace {

bool mutation_fits(LatticeKind kind, Mutation::Kind m) {
  switch (m) {
    case Mutation::Kind::CounterInc:
      return kind == LatticeKind::GCounter || kind == LatticeKind::PnCounter;
    case Mutation::Kind::CounterDec:
      return kind == LatticeKind::PnCounter;
    case Mutation::Kind::SetAdd:
      return kind == LatticeKind::GSet || kind == LatticeKind::OrSet;
    case Mutation::Kind::SetRemove:
      return kind == LatticeKind::OrSet;
    case Mutation::Kind::RegisterSet:
      return kind == LatticeKind::LwwRegister;
  }
  return false;
}

Json mutation_detail(const VarId& var, const Mutation& m) {
  Json detail;
  detail["var"] = var.name;
  detail["action"] = std::string(to_string(m.kind));
  if (m.kind == Mutation::Kind::CounterInc ||
      m.kind == Mutation::Kind::CounterDec)
    detail["amount"] = m.amount;
  else
    detail["value"] = to_json(m.value);
  return detail;
}

}  // namespace

void SimConfig::validate() const {
  if (node_ids.empty())
    throw std::invalid_argument("simulation needs at least one node");
  std::set<ReplicaId> seen;
  for (const ReplicaId& id : node_ids) {
    if (id.id.empty()) throw std::invalid_argument("empty node id");
    if (!seen.insert(id).second)
      throw std::invalid_argument("duplicate node id '" + id.id + "'");
  }
  net.validate();
  if (fanout < 1) throw std::invalid_argument("fanout must be >= 1");
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  DataflowGraph::validate_nodes(graph_nodes);

  const auto node_exists = [&](const ReplicaId& id) {
    return seen.count(id) > 0;
  };
  for (const ScriptedUpdate& u : updates) {
    if (!node_exists(u.node))
      throw std::invalid_argument("update scheduled on unknown node '" +
                                  u.node.id + "'");
    if (u.round < 0 || u.round >= max_rounds)
      throw std::invalid_argument("update round " + std::to_string(u.round) +
                                  " outside [0, max_rounds)");
    auto it = graph_nodes.find(u.var);
    if (it == graph_nodes.end() || !it->second.is_input())
      throw std::invalid_argument("update targets non-input variable '" +
                                  u.var.name + "'");
    if (!mutation_fits(it->second.input().kind, u.mutation.kind))
      throw std::invalid_argument(
          "mutation '" + std::string(to_string(u.mutation.kind)) +
          "' does not fit variable '" + u.var.name + "'");
  }
  for (const VarId& w : watches) {
    auto it = graph_nodes.find(w);
    if (it == graph_nodes.end())
      throw std::invalid_argument("watch on unknown variable '" + w.name + "'");
    const bool orset_valued =
        it->second.is_input()
            ? it->second.input().kind == LatticeKind::OrSet
            : it->second.derived().op != DfOp::FoldSum &&
                  it->second.derived().op != DfOp::FoldCount;
    if (!orset_valued)
      throw std::invalid_argument("watch variable '" + w.name +
                                  "' is not set-valued");
  }
  for (const Partition& p : net.partitions) {
    for (const ReplicaId& r : p.side_a)
      if (!node_exists(r))
        throw std::invalid_argument("partition names unknown node '" + r.id + "'");
    for (const ReplicaId& r : p.side_b)
      if (!node_exists(r))
        throw std::invalid_argument("partition names unknown node '" + r.id + "'");
  }
}

Simulation::Simulation(SimConfig config)
    : config_(std::move(config)), rng_(config_.seed) {
  config_.validate();
  for (const ReplicaId& id : config_.node_ids) {
    SimNode node{id, DataflowGraph::from_nodes(id, config_.graph_nodes), true, {}};
    for (const VarId& w : config_.watches) node.watch_seen[w] = {};
    nodes_.push_back(std::move(node));
  }
}

SimNode& Simulation::node_of(const ReplicaId& id) {
  for (SimNode& n : nodes_)
    if (n.id == id) return n;
  throw std::invalid_argument("unknown node '" + id.id + "'");
}

void Simulation::apply_envelope(SimNode& node, const MessageEnvelope& env) {
  for (const auto& [var, value] : env.payload) node.graph.merge_var(var, value);
  node.graph.propagate();
}

void Simulation::check_watches(SimNode& node, int event_round) {
  for (const VarId& w : config_.watches) {
    const std::set<Element> current = node.graph.read(w).as_orset().elements();
    std::set<Element>& seen = node.watch_seen[w];
    Json added = Json::array();
    for (const Element& e : current)
      if (seen.insert(e).second) added.push_back(to_json(e));
    if (!added.empty()) {
      Json detail;
      detail["var"] = w.name;
      detail["added"] = std::move(added);
      trace_.push_back(
          {event_round, node.id, TraceEventType::Alert, std::move(detail)});
    }
  }
}

void Simulation::apply_scripted_updates() {
  std::set<ReplicaId> touched;
  for (const ScriptedUpdate& u : config_.updates) {
    if (u.round != round_) continue;
    SimNode& node = node_of(u.node);
    node.graph.update(u.var, u.mutation);
    touched.insert(u.node);
    trace_.push_back({round_, u.node, TraceEventType::Update,
                      mutation_detail(u.var, u.mutation)});
  }
  for (SimNode& node : nodes_) {
    if (touched.count(node.id) == 0) continue;
    node.graph.propagate();
    check_watches(node, round_);
  }
}

void Simulation::admit(MessageEnvelope env, int base_round) {
  const std::string kind = env.expects_reply ? "push" : "reply";
  if (config_.net.crosses_partition(base_round, env.src, env.dst)) {
    ++dropped_;
    Json detail;
    detail["to"] = env.dst.id;
    detail["kind"] = kind;
    detail["reason"] = "partition";
    trace_.push_back(
        {base_round, env.src, TraceEventType::Drop, std::move(detail)});
    return;
  }
  if (rng_.chance(config_.net.drop_prob)) {
    ++dropped_;
    Json detail;
    detail["to"] = env.dst.id;
    detail["kind"] = kind;
    detail["reason"] = "loss";
    trace_.push_back(
        {base_round, env.src, TraceEventType::Drop, std::move(detail)});
    return;
  }
  const bool duplicate = rng_.chance(config_.net.dup_prob);
  const int delay = static_cast<int>(
      rng_.uniform(1, 1 + static_cast<std::uint64_t>(config_.net.max_delay_rounds)));
  env.deliver_at_round = base_round + delay;
  env.enqueue_index = next_enqueue_index_++;
  in_flight_.push_back(env);
  if (duplicate) {
    MessageEnvelope copy = env;
    const int copy_delay = static_cast<int>(rng_.uniform(
        1, 1 + static_cast<std::uint64_t>(config_.net.max_delay_rounds)));
    copy.deliver_at_round = base_round + copy_delay;
    copy.enqueue_index = next_enqueue_index_++;
    ++duplicated_;
    Json detail;
    detail["to"] = copy.dst.id;
    detail["kind"] = kind;
    trace_.push_back(
        {base_round, copy.src, TraceEventType::Dup, std::move(detail)});
    in_flight_.push_back(std::move(copy));
  }
}

void Simulation::enqueue_pushes() {
  for (SimNode& node : nodes_) {
    if (!node.alive) continue;
    std::vector<ReplicaId> peers;
    for (const ReplicaId& id : config_.node_ids)
      if (!(id == node.id)) peers.push_back(id);
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(config_.fanout),
                              peers.size());
    rng_.choose_prefix(peers, k);
    const std::map<VarId, LatticeValue> payload = node.graph.input_store();
    for (std::size_t i = 0; i < k; ++i) {
      MessageEnvelope env;
      env.src = node.id;
      env.dst = peers[i];
      env.expects_reply = true;
      env.payload = payload;
      ++messages_sent_;
      Json detail;
      detail["to"] = env.dst.id;
      detail["kind"] = "push";
      trace_.push_back({round_, env.src, TraceEventType::Send, std::move(detail)});
      admit(std::move(env), round_);
    }
  }
}

void Simulation::deliver_due(int new_round) {
  std::vector<MessageEnvelope> due;
  for (auto it = in_flight_.begin(); it != in_flight_.end();) {
    if (it->deliver_at_round == new_round) {
      due.push_back(std::move(*it));
      it = in_flight_.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(due.begin(), due.end(),
            [](const MessageEnvelope& a, const MessageEnvelope& b) {
              return std::tie(a.dst, a.src, a.enqueue_index) <
                     std::tie(b.dst, b.src, b.enqueue_index);
            });
  for (MessageEnvelope& env : due) {
    SimNode& dst = node_of(env.dst);
    if (!dst.alive) continue;
    apply_envelope(dst, env);
    ++delivered_;
    Json detail;
    detail["from"] = env.src.id;
    detail["kind"] = env.expects_reply ? "push" : "reply";
    trace_.push_back({new_round, env.dst, TraceEventType::Deliver, detail});
    check_watches(dst, new_round);
    if (env.expects_reply) {
      MessageEnvelope reply;
      reply.src = env.dst;
      reply.dst = env.src;
      reply.expects_reply = false;
      reply.payload = dst.graph.input_store();
      ++messages_sent_;
      Json send_detail;
      send_detail["to"] = reply.dst.id;
      send_detail["kind"] = "reply";
      trace_.push_back(
          {new_round, reply.src, TraceEventType::Send, std::move(send_detail)});
      admit(std::move(reply), new_round);
    }
    delivered_log_.push_back(std::move(env));
  }
}

void Simulation::step() {
  apply_scripted_updates();
  enqueue_pushes();
  const int new_round = round_ + 1;
  deliver_due(new_round);
  round_ = new_round;
}

bool Simulation::converged() const {
  const SimNode* reference = nullptr;
  for (const SimNode& node : nodes_) {
    if (!node.alive) continue;
    if (reference == nullptr) {
      reference = &node;
    } else if (!(node.graph.store() == reference->graph.store())) {
      return false;
    }
  }
  for (const MessageEnvelope& env : in_flight_) {
    const SimNode* dst = nullptr;
    for (const SimNode& node : nodes_)
      if (node.id == env.dst) dst = &node;
    if (dst == nullptr || !dst->alive) continue;
    for (const auto& [var, value] : env.payload)
      if (!leq(value, dst->graph.read(var))) return false;
  }
  return true;
}

SimReport Simulation::run() {
  const auto updates_pending = [this] {
    for (const ScriptedUpdate& u : config_.updates)
      if (u.round >= round_) return true;
    return false;
  };

  bool done = converged() && !updates_pending();
  while (!done && round_ < config_.max_rounds) {
    step();
    done = converged() && !updates_pending();
  }

  SimReport report;
  report.converged = done;
  report.rounds = round_;
  if (done) {
    report.converged_at_round = round_;
    trace_.push_back({round_, ReplicaId{}, TraceEventType::Converge, Json::object()});
  }
  report.messages_sent = messages_sent_;
  report.dropped = dropped_;
  report.duplicated = duplicated_;
  report.delivered = delivered_;
  for (const SimNode& node : nodes_)
    report.final_stores[node.id] = node.graph.store();
  return report;
}

}  // namespace latticeflow

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

#include "latticeflow/scenarios.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latticeflow {

namespace {

const VarId kReadings("readings");
const VarId kAlerts("alerts");

Mutation mutation_from_update(const UpdateDecl& u) {
  const auto need_value = [&]() -> const Element& {
    if (!u.value)
      throw std::invalid_argument("update action '" + u.action +
                                  "' needs a value");
    return *u.value;
  };
  if (u.action == "inc") return Mutation::counter_inc(u.amount);
  if (u.action == "dec") return Mutation::counter_dec(u.amount);
  if (u.action == "add") return Mutation::set_add(need_value());
  if (u.action == "remove") return Mutation::set_remove(need_value());
  if (u.action == "set") return Mutation::register_set(need_value());
  throw std::invalid_argument("unknown update action '" + u.action + "'");
}

Element reading_element(const ReplicaId& node, double temp) {
  return Element::pair(Element::of_string(node.id), Element::of_f64(temp));
}

NetworkModel network_from(const ScenarioConfig& cfg) {
  NetworkModel net;
  net.drop_prob = cfg.drop_prob;
  net.dup_prob = cfg.dup_prob;
  net.max_delay_rounds = cfg.max_delay_rounds;
  const std::vector<ReplicaId> ids = cfg.node_ids();
  for (const PartitionDecl& decl : cfg.partitions) {
    Partition p;
    p.from_round = decl.from_round;
    p.to_round = decl.to_round;
    p.side_a.insert(decl.side_a.begin(), decl.side_a.end());
    if (decl.side_b.empty()) {
      for (const ReplicaId& id : ids)
        if (p.side_a.count(id) == 0) p.side_b.insert(id);
    } else {
      p.side_b.insert(decl.side_b.begin(), decl.side_b.end());
    }
    net.partitions.push_back(std::move(p));
  }
  return net;
}

}  // namespace

SimConfig build_sim_config(const ScenarioConfig& cfg) {
  SimConfig sim;
  sim.node_ids = cfg.node_ids();
  sim.net = network_from(cfg);
  sim.fanout = cfg.fanout;
  sim.seed = cfg.seed;
  sim.max_rounds = cfg.max_rounds;

  if (cfg.scenario == "fridge") {
    sim.graph_nodes.emplace(kReadings, NodeSpec(InputSpec{LatticeKind::OrSet}));
    sim.graph_nodes.emplace(
        kAlerts,
        NodeSpec(DerivedSpec{DfOp::Filter,
                             "second_gt(" + f64_to_string(cfg.threshold_celsius) + ")",
                             {kReadings}}));
    sim.watches.push_back(kAlerts);
    for (const ReadingSpec& r : cfg.readings) {
      ScriptedUpdate u;
      u.round = r.round;
      u.node = r.node;
      u.var = kReadings;
      u.mutation = Mutation::set_add(reading_element(r.node, r.temp_celsius));
      sim.updates.push_back(std::move(u));
    }
  } else {
    for (const VarDecl& v : cfg.vars)
      sim.graph_nodes.emplace(v.name, NodeSpec(InputSpec{v.kind}));
    for (const DerivedDecl& d : cfg.derived)
      sim.graph_nodes.emplace(d.name, NodeSpec(DerivedSpec{d.op, d.fn_id, d.inputs}));
    for (const UpdateDecl& u : cfg.updates) {
      ScriptedUpdate s;
      s.round = u.round;
      s.node = u.node;
      s.var = u.var;
      s.mutation = mutation_from_update(u);
      sim.updates.push_back(std::move(s));
    }
    sim.watches = cfg.watches;
  }
  return sim;
}

namespace {

FridgeReport fridge_report_from(const ScenarioConfig& cfg,
                                const Simulation& sim) {
  FridgeReport report;
  report.threshold_celsius = cfg.threshold_celsius;

  for (const SimNode& node : sim.sim_nodes()) {
    report.alert_events[node.id];  // every node appears, alerted or not
    report.final_alerts[node.id] =
        node.graph.read(kAlerts).as_orset().elements();
  }
  for (const TraceEvent& e : sim.trace()) {
    if (e.type != TraceEventType::Alert) continue;
    for (const Json& el : e.detail.at("added"))
      report.alert_events[e.node].emplace_back(e.round, element_from_json(el));
  }

  for (const ReadingSpec& r : cfg.readings) {
    if (!(r.temp_celsius > cfg.threshold_celsius)) continue;
    AlertLatency lat;
    lat.node = r.node;
    lat.reading_round = r.round;
    lat.temp_celsius = r.temp_celsius;
    const Element elem = reading_element(r.node, r.temp_celsius);
    for (const auto& [round, seen] : report.alert_events.at(r.node)) {
      if (seen == elem) {
        lat.latency_rounds = std::max(0, round - r.round);
        break;
      }
    }
    report.latencies.push_back(std::move(lat));
  }

  // Alert sets only grow, so each node reaches the common final set at the
  // round of its last first-sighting; the fleet converges at the max.
  bool all_equal = true;
  const std::set<Element>& reference = report.final_alerts.begin()->second;
  for (const auto& [node, alerts] : report.final_alerts)
    if (alerts != reference) all_equal = false;
  if (all_equal) {
    int round = 0;
    for (const auto& [node, events] : report.alert_events)
      for (const auto& [r, elem] : events) round = std::max(round, r);
    report.alert_convergence_round = round;
  }
  return report;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  Simulation sim(build_sim_config(cfg));
  ScenarioResult result;
  result.sim = sim.run();
  result.trace = sim.trace();
  if (cfg.scenario == "fridge") result.fridge = fridge_report_from(cfg, sim);
  return result;
}

namespace {

std::string element_set_text(const std::set<Element>& elems) {
  std::string out = "{";
  bool first = true;
  for (const Element& e : elems) {
    if (!first) out += ", ";
    out += e.to_literal();
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

std::string render_text(const ScenarioConfig& cfg, const ScenarioResult& result) {
  std::ostringstream out;
  out << "scenario: " << cfg.scenario << "\n";
  out << "nodes: " << cfg.nodes << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "converged: " << (result.sim.converged ? "true" : "false") << "\n";
  out << "rounds: " << result.sim.rounds << "\n";
  if (result.sim.converged)
    out << "converged_at_round: " << result.sim.converged_at_round << "\n";
  out << "messages_sent: " << result.sim.messages_sent << "\n";
  out << "dropped: " << result.sim.dropped << "\n";
  out << "duplicated: " << result.sim.duplicated << "\n";
  out << "delivered: " << result.sim.delivered << "\n";
  if (result.fridge) {
    const FridgeReport& fr = *result.fridge;
    out << "threshold_celsius: " << f64_to_string(fr.threshold_celsius) << "\n";
    out << "alerts:\n";
    for (const auto& [node, alerts] : fr.final_alerts)
      out << "  " << node.id << ": " << element_set_text(alerts) << "\n";
    out << "alert_latencies:\n";
    for (const AlertLatency& lat : fr.latencies)
      out << "  " << lat.node.id << " round " << lat.reading_round << " temp "
          << f64_to_string(lat.temp_celsius) << " -> "
          << lat.latency_rounds << " rounds\n";
    out << "alert_convergence_round: " << fr.alert_convergence_round << "\n";
  }
  out << "final_stores:\n";
  for (const auto& [node, store] : result.sim.final_stores) {
    out << "  " << node.id << ":\n";
    for (const auto& [var, value] : store)
      out << "    " << var.name << " = " << canonical_bytes(value) << "\n";
  }
  return out.str();
}

Json render_json(const ScenarioConfig& cfg, const ScenarioResult& result) {
  Json out;
  out["scenario"] = cfg.scenario;
  out["nodes"] = cfg.nodes;
  out["seed"] = cfg.seed;
  out["converged"] = result.sim.converged;
  out["rounds"] = result.sim.rounds;
  out["converged_at_round"] = result.sim.converged_at_round;
  Json messages;
  messages["sent"] = result.sim.messages_sent;
  messages["dropped"] = result.sim.dropped;
  messages["duplicated"] = result.sim.duplicated;
  messages["delivered"] = result.sim.delivered;
  out["messages"] = std::move(messages);
  if (result.fridge) {
    const FridgeReport& fr = *result.fridge;
    Json fridge;
    fridge["threshold_celsius"] = fr.threshold_celsius;
    Json alerts;
    for (const auto& [node, elems] : fr.final_alerts) {
      Json arr = Json::array();
      for (const Element& e : elems) arr.push_back(to_json(e));
      alerts[node.id] = std::move(arr);
    }
    fridge["final_alerts"] = std::move(alerts);
    Json latencies = Json::array();
    for (const AlertLatency& lat : fr.latencies) {
      Json l;
      l["node"] = lat.node.id;
      l["reading_round"] = lat.reading_round;
      l["temp_celsius"] = lat.temp_celsius;
      l["latency_rounds"] = lat.latency_rounds;
      latencies.push_back(std::move(l));
    }
    fridge["latencies"] = std::move(latencies);
    fridge["alert_convergence_round"] = fr.alert_convergence_round;
    out["fridge"] = std::move(fridge);
  }
  Json stores;
  for (const auto& [node, store] : result.sim.final_stores) {
    Json vars;
    for (const auto& [var, value] : store) vars[var.name] = to_json(value);
    stores[node.id] = std::move(vars);
  }
  out["final_stores"] = std::move(stores);
  return out;
}

}  // namespace latticeflow

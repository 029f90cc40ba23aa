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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "latticeflow/cli.hpp"
#include "latticeflow/confluence.hpp"
#include "latticeflow/laws.hpp"
#include "latticeflow/scenarios.hpp"
#include "latticeflow/serialize.hpp"

namespace latticeflow {
namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void check_time(Criterion& c, double elapsed, double budget) {
  if (elapsed >= budget)
    c.fail("took " + std::to_string(elapsed) + "s, budget " +
           std::to_string(budget) + "s");
}

constexpr std::array<LatticeKind, 5> kKinds = {
    LatticeKind::GCounter, LatticeKind::PnCounter, LatticeKind::GSet,
    LatticeKind::OrSet, LatticeKind::LwwRegister};

// ---- criterion 1: ACI laws, >= 1000 random triples per type ----
Criterion aci_laws() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  for (LatticeKind kind : kKinds) {
    for (int i = 0; i < 1000; ++i) {
      const auto vals = random_value_family(kind, rng, 3);
      const LatticeValue &a = vals[0], &b = vals[1], &cc = vals[2];
      if (!(join(a, a) == a)) c.fail("idempotence");
      if (!(join(a, b) == join(b, a))) c.fail("commutativity");
      if (!(join(a, join(b, cc)) == join(join(a, b), cc)))
        c.fail("associativity");
      if (!(join(bottom(kind), a) == a)) c.fail("bottom identity");
      if (!c.ok) {
        c.detail += std::string(" (") + std::string(to_string(kind)) + ")";
        return c;
      }
    }
  }
  const double elapsed = seconds_since(start);
  check_time(c, elapsed, 30.0);
  std::ostringstream note;
  note << "5 types x 1000 triples in " << elapsed << "s";
  if (c.ok) c.detail = note.str();
  return c;
}

// ---- criterion 2: exhaustive confluence over small scripts ----
Criterion exhaustive_confluence() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();

  // Drive the real subcommand: it enumerates both types at the default
  // bounds, reports the interleaving count, and exits 0 only if every
  // delivery sequence reached the single reference state.
  std::ostringstream out, err;
  const int rc =
      cli_main({"fuzz", "--max-ops", "4", "--replicas", "3"}, out, err);
  if (rc != 0) c.fail("fuzz subcommand exited " + std::to_string(rc));

  const std::uint64_t want =
      expected_confluence_sequences(ConfluenceKind::OrSet, 4, 3) +
      expected_confluence_sequences(ConfluenceKind::PnCounter, 4, 3);
  const std::string needle = "interleavings checked: ";
  const auto pos = out.str().find(needle);
  std::uint64_t reported = 0;
  if (pos == std::string::npos)
    c.fail("fuzz did not report an interleaving count");
  else
    reported = std::stoull(out.str().substr(pos + needle.size()));
  if (c.ok && reported != want)
    c.fail("reported " + std::to_string(reported) +
           " interleavings, enumeration space is " + std::to_string(want));

  const double elapsed = seconds_since(start);
  check_time(c, elapsed, 300.0);
  if (c.ok) {
    std::ostringstream note;
    note << reported << " delivery sequences in " << elapsed << "s";
    c.detail = note.str();
  }
  return c;
}

// ---- criterion 3: dataflow homomorphism / merge coherence ----
Criterion dataflow_homomorphism() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(303);
  const ElementFn fn = compile_fn("scale(3)");
  const ElementPred pred = compile_pred("gt(2)");
  for (int i = 0; i < 1000 && c.ok; ++i) {
    const auto fam = random_orset_family(rng, 2);
    if (!(df_map(fam[0].joined(fam[1]), fn) ==
          df_map(fam[0], fn).joined(df_map(fam[1], fn))))
      c.fail("map does not distribute over join");
    if (!(df_filter(fam[0].joined(fam[1]), pred) ==
          df_filter(fam[0], pred).joined(df_filter(fam[1], pred))))
      c.fail("filter does not distribute over join");
  }
  for (int i = 0; i < 1000 && c.ok; ++i) {
    const auto left = random_orset_family(rng, 2);
    const auto right = random_orset_family(rng, 2);
    if (!(df_union(left[0].joined(left[1]), right[0].joined(right[1])) ==
          df_union(left[0], right[0]).joined(df_union(left[1], right[1]))))
      c.fail("union merge-coherence");
    const OrSet merged_product = df_product(left[0].joined(left[1]), right[0]);
    const OrSet joined_product =
        df_product(left[0], right[0]).joined(df_product(left[1], right[0]));
    if (!(merged_product.entries() == joined_product.entries()))
      c.fail("product merge-coherence at composite dots");
  }
  const double elapsed = seconds_since(start);
  check_time(c, elapsed, 60.0);
  if (c.ok) {
    std::ostringstream note;
    note << "1000 pairs per operator in " << elapsed << "s";
    c.detail = note.str();
  }
  return c;
}

// ---- criteria 4 and 5 share this gossip workload ----
SimConfig gossip_workload(std::uint64_t seed) {
  SimConfig cfg;
  for (int i = 0; i < 8; ++i) cfg.node_ids.push_back(replica_name(i));
  cfg.graph_nodes.emplace(VarId("events"), NodeSpec(InputSpec{LatticeKind::OrSet}));
  cfg.graph_nodes.emplace(VarId("names"), NodeSpec(InputSpec{LatticeKind::GSet}));
  cfg.graph_nodes.emplace(VarId("tally"),
                          NodeSpec(InputSpec{LatticeKind::PnCounter}));
  cfg.graph_nodes.emplace(
      VarId("hot"), NodeSpec(DerivedSpec{DfOp::Filter, "gt(5)", {VarId("events")}}));
  cfg.net.drop_prob = 0.3;
  cfg.net.dup_prob = 0.1;
  cfg.net.max_delay_rounds = 2;
  cfg.fanout = 2;
  cfg.seed = seed;
  cfg.max_rounds = 50;

  // 20 scripted updates whose joint effect is delivery-independent.
  int round = 0;
  int node = 0;
  for (int i = 0; i < 20; ++i) {
    ScriptedUpdate u;
    u.round = round;
    u.node = replica_name(node);
    switch (i % 4) {
      case 0:
        u.var = VarId("events");
        u.mutation = Mutation::set_add(Element::of_int(i));
        break;
      case 1:
        u.var = VarId("names");
        u.mutation = Mutation::set_add(Element::of_string("n" + std::to_string(i)));
        break;
      case 2:
        u.var = VarId("tally");
        u.mutation = Mutation::counter_inc(1 + i % 3);
        break;
      default:
        u.var = VarId("tally");
        u.mutation = Mutation::counter_dec(1);
        break;
    }
    cfg.updates.push_back(std::move(u));
    node = (node + 3) % 8;
    round = (round + 1) % 6;
  }
  return cfg;
}

std::map<VarId, LatticeValue> gossip_oracle(const SimConfig& cfg) {
  std::map<ReplicaId, DataflowGraph> per_node;
  for (const ReplicaId& id : cfg.node_ids)
    per_node.emplace(id, DataflowGraph::from_nodes(id, cfg.graph_nodes));
  // Owners apply their mutations in round order (script order within a
  // round), mirroring the simulator's schedule; only delivery is free.
  std::vector<ScriptedUpdate> ordered = cfg.updates;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ScriptedUpdate& a, const ScriptedUpdate& b) {
                     return a.round < b.round;
                   });
  for (const ScriptedUpdate& u : ordered)
    per_node.at(u.node).update(u.var, u.mutation);
  std::map<VarId, LatticeValue> acc;
  for (const auto& [var, spec] : cfg.graph_nodes) {
    if (!spec.is_input()) continue;
    LatticeValue v = bottom(spec.input().kind);
    for (const auto& [id, graph] : per_node) v = join(v, graph.read(var));
    acc.emplace(var, std::move(v));
  }
  return acc;
}

Criterion gossip_convergence() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  int max_rounds_seen = 0;
  for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed) {
    const SimConfig cfg = gossip_workload(seed);
    Simulation sim(cfg);
    const SimReport report = sim.run();
    if (!report.converged || report.rounds > 50) {
      c.fail("seed " + std::to_string(seed) + " did not converge within 50 rounds");
      break;
    }
    max_rounds_seen = std::max(max_rounds_seen, report.rounds);
    const auto oracle = gossip_oracle(cfg);
    for (const SimNode& node : sim.sim_nodes())
      for (const auto& [var, want] : oracle)
        if (!(node.graph.read(var) == want)) {
          c.fail("seed " + std::to_string(seed) + ": node " + node.id.id +
                 " var " + var.name + " differs from oracle join");
          break;
        }
  }
  const double elapsed = seconds_since(start);
  check_time(c, elapsed, 60.0);
  if (c.ok) {
    std::ostringstream note;
    note << "100 seeds, max " << max_rounds_seen << " rounds, in " << elapsed
         << "s";
    c.detail = note.str();
  }
  return c;
}

Criterion replay_and_reorder() {
  Criterion c;

  // Replay: re-applying the full delivered log to final states is a no-op.
  for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed) {
    const SimConfig cfg = gossip_workload(seed);
    Simulation sim(cfg);
    (void)sim.run();
    auto nodes = sim.sim_nodes();  // mutable copies of final states
    std::vector<std::map<VarId, LatticeValue>> before;
    for (const SimNode& n : nodes) before.push_back(n.graph.store());
    for (const MessageEnvelope& env : sim.delivered_log())
      for (SimNode& n : nodes)
        if (n.id == env.dst) Simulation::apply_envelope(n, env);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!(nodes[i].graph.store() == before[i]))
        c.fail("seed " + std::to_string(seed) + ": replaying the log changed " +
               nodes[i].id.id);
  }

  // Reorder: runs with <= 5 delivered envelopes, exhaustively permuted.
  int exercised = 0;
  for (std::uint64_t seed = 1; seed <= 60 && c.ok; ++seed) {
    SimConfig cfg;
    cfg.node_ids = {ReplicaId("A"), ReplicaId("B")};
    cfg.graph_nodes.emplace(VarId("events"),
                            NodeSpec(InputSpec{LatticeKind::OrSet}));
    cfg.graph_nodes.emplace(VarId("tally"),
                            NodeSpec(InputSpec{LatticeKind::PnCounter}));
    cfg.net.drop_prob = 0.4;
    cfg.fanout = 1;
    cfg.seed = seed;
    cfg.max_rounds = 3;
    cfg.updates = {
        {0, ReplicaId("A"), VarId("events"),
         Mutation::set_add(Element::of_string("x"))},
        {0, ReplicaId("B"), VarId("tally"), Mutation::counter_inc(2)},
    };
    Simulation sim(cfg);
    (void)sim.run();
    const auto& log = sim.delivered_log();
    if (log.empty() || log.size() > 5) continue;
    ++exercised;

    std::map<ReplicaId, std::map<VarId, LatticeValue>> sim_stores;
    for (const SimNode& n : sim.sim_nodes()) sim_stores[n.id] = n.graph.store();

    std::vector<std::size_t> order(log.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::map<ReplicaId, SimNode> fresh;
      for (const ReplicaId& id : cfg.node_ids)
        fresh.emplace(id, SimNode{id, DataflowGraph::from_nodes(id, cfg.graph_nodes),
                                  true, {}});
      for (const ScriptedUpdate& u : cfg.updates)
        fresh.at(u.node).graph.update(u.var, u.mutation);
      for (auto& [id, node] : fresh) node.graph.propagate();
      for (std::size_t i : order)
        Simulation::apply_envelope(fresh.at(log[i].dst), log[i]);
      for (const auto& [id, node] : fresh)
        if (!(node.graph.store() == sim_stores.at(id)))
          c.fail("seed " + std::to_string(seed) +
                 ": a delivery permutation changed node " + id.id);
    } while (std::next_permutation(order.begin(), order.end()) && c.ok);
  }
  if (exercised < 5)
    c.fail("only " + std::to_string(exercised) +
           " runs had <= 5 delivered envelopes");
  if (c.ok)
    c.detail = "100 replayed logs; " + std::to_string(exercised) +
               " runs permuted exhaustively";
  return c;
}

// ---- criterion 6: fridge scenario across 20 seeds ----
Criterion fridge_scenario() {
  Criterion c;
  for (std::uint64_t seed = 1; seed <= 20 && c.ok; ++seed) {
    ScenarioConfig cfg;
    cfg.scenario = "fridge";
    cfg.nodes = 5;
    cfg.seed = seed;
    cfg.drop_prob = 0.2;
    cfg.dup_prob = 0.1;
    cfg.max_delay_rounds = 1;
    cfg.fanout = 2;
    cfg.max_rounds = 40;
    cfg.threshold_celsius = 8.0;
    cfg.partitions = {{2, 6, {ReplicaId("C")}, {}}};  // C alone for [2, 6)
    cfg.readings = {{0, ReplicaId("A"), 4.0},
                    {3, ReplicaId("C"), 9.5},   // over threshold, partitioned
                    {4, ReplicaId("B"), 6.0}};

    const ScenarioResult result = run_scenario(cfg);
    const FridgeReport& fr = *result.fridge;

    if (fr.latencies.size() != 1 || fr.latencies[0].latency_rounds != 0)
      c.fail("seed " + std::to_string(seed) + ": local alert latency not 0");

    const std::set<Element> want = {
        Element::pair(Element::of_string("C"), Element::of_f64(9.5))};
    for (const auto& [node, alerts] : fr.final_alerts)
      if (alerts != want)
        c.fail("seed " + std::to_string(seed) + ": node " + node.id +
               " alert set differs");

    // All alert sets equal within 10 rounds of the heal at round 6.
    if (fr.alert_convergence_round < 0 || fr.alert_convergence_round > 16)
      c.fail("seed " + std::to_string(seed) + ": alert sets converged at round " +
             std::to_string(fr.alert_convergence_round) + ", want <= 16");

    // Nobody outside C alerted while the partition was up.
    for (const auto& [node, events] : fr.alert_events)
      for (const auto& [round, elem] : events)
        if (!(node == ReplicaId("C")) && round < 6)
          c.fail("seed " + std::to_string(seed) + ": " + node.id +
                 " alerted during the partition");
  }
  if (c.ok) c.detail = "20 seeds: latency 0, fleet agreement within 10 rounds of heal";
  return c;
}

// ---- criterion 7: byte-identical reports and traces ----
Criterion determinism() {
  Criterion c;
  ScenarioConfig fridge;
  fridge.scenario = "fridge";
  fridge.nodes = 5;
  fridge.seed = 7;
  fridge.drop_prob = 0.2;
  fridge.dup_prob = 0.1;
  fridge.max_delay_rounds = 1;
  fridge.fanout = 2;
  fridge.max_rounds = 30;
  fridge.partitions = {{2, 6, {ReplicaId("C")}, {}}};
  fridge.readings = {{0, ReplicaId("A"), 4.0}, {3, ReplicaId("C"), 9.5}};

  ScenarioConfig gossip;
  gossip.scenario = "gossip";
  gossip.nodes = 6;
  gossip.seed = 23;
  gossip.drop_prob = 0.3;
  gossip.dup_prob = 0.1;
  gossip.max_delay_rounds = 2;
  gossip.fanout = 2;
  gossip.max_rounds = 40;
  gossip.vars = {{VarId("s"), LatticeKind::OrSet}};
  gossip.derived = {{VarId("sum"), DfOp::FoldSum, "", {VarId("s")}}};
  gossip.updates = {{0, ReplicaId("A"), VarId("s"), "add", 1, Element::of_int(2)},
                    {1, ReplicaId("D"), VarId("s"), "add", 1, Element::of_int(5)}};

  for (const ScenarioConfig& cfg : {fridge, gossip}) {
    const ScenarioResult r1 = run_scenario(cfg);
    const ScenarioResult r2 = run_scenario(cfg);
    if (render_text(cfg, r1) != render_text(cfg, r2))
      c.fail(cfg.scenario + ": text reports differ");
    if (render_json(cfg, r1).dump() != render_json(cfg, r2).dump())
      c.fail(cfg.scenario + ": structured reports differ");
    if (to_jsonl(r1.trace) != to_jsonl(r2.trace))
      c.fail(cfg.scenario + ": traces differ");
  }
  if (c.ok) c.detail = "fridge and gossip scenarios byte-identical across reruns";
  return c;
}

}  // namespace
}  // namespace latticeflow

int main() {
  using latticeflow::Criterion;
  struct Entry {
    const char* label;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"criterion 1: ACI law suite", latticeflow::aci_laws},
      {"criterion 2: exhaustive confluence oracle",
       latticeflow::exhaustive_confluence},
      {"criterion 3: dataflow homomorphism", latticeflow::dataflow_homomorphism},
      {"criterion 4: gossip convergence", latticeflow::gossip_convergence},
      {"criterion 5: replay/reorder tolerance", latticeflow::replay_and_reorder},
      {"criterion 6: fridge scenario", latticeflow::fridge_scenario},
      {"criterion 7: determinism", latticeflow::determinism},
  };
  bool all_ok = true;
  for (const Entry& e : entries) {
    Criterion c;
    try {
      c = e.fn();
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] %s%s%s\n", c.ok ? "PASS" : "FAIL", e.label,
                c.detail.empty() ? "" : " — ", c.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES");
  return all_ok ? 0 : 1;
}

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

#include "latticeflow/laws.hpp"

#include <array>
#include <functional>

#include "latticeflow/dataflow.hpp"
#include "latticeflow/dataflow_graph.hpp"
#include "latticeflow/serialize.hpp"

namespace latticeflow {

namespace {

const std::array<ReplicaId, 3> kReplicas = {ReplicaId("A"), ReplicaId("B"),
                                            ReplicaId("C")};

Element element_from_pool(Rng& rng) {
  switch (rng.uniform(0, 6)) {
    case 0:
      return Element::of_int(static_cast<std::int64_t>(rng.uniform(0, 9)));
    case 1:
      return Element::of_int(-2);
    case 2:
      return Element::of_f64(4.0);
    case 3:
      return Element::of_f64(9.5);
    case 4:
      return Element::of_string("x");
    case 5:
      return Element::of_string("y");
    default:
      return Element::of_string("z");
  }
}

}  // namespace

Element random_element(Rng& rng, int max_depth) {
  if (max_depth > 0 && rng.chance(0.25))
    return Element::pair(random_element(rng, max_depth - 1),
                         random_element(rng, max_depth - 1));
  return element_from_pool(rng);
}

std::vector<OrSet> random_orset_family(Rng& rng, int count) {
  // Shared event table: the element created by each (replica, sequence).
  std::map<ReplicaId, std::vector<Element>> events;
  for (const ReplicaId& r : kReplicas) {
    const int n = static_cast<int>(rng.uniform(0, 4));
    for (int i = 0; i < n; ++i) events[r].push_back(random_element(rng));
  }

  std::vector<OrSet> family;
  for (int i = 0; i < count; ++i) {
    std::map<Dot, Element> entries;
    VersionVector compact;
    std::set<Dot> cloud;
    for (const auto& [r, elems] : events) {
      for (std::size_t s = 0; s < elems.size(); ++s) {
        if (!rng.chance(0.8)) continue;  // this state never saw the event
        const Dot dot(r, s + 1);
        cloud.insert(dot);
        if (rng.chance(0.7)) entries.emplace(dot, elems[s]);
      }
    }
    family.push_back(OrSet::from_parts(
        std::move(entries),
        CausalContext::from_parts(std::move(compact), std::move(cloud))));
  }
  return family;
}

Mutation random_mutation(LatticeKind kind, Rng& rng) {
  switch (kind) {
    case LatticeKind::GCounter:
      return Mutation::counter_inc(rng.uniform(1, 4));
    case LatticeKind::PnCounter:
      return rng.chance(0.5) ? Mutation::counter_inc(rng.uniform(1, 4))
                             : Mutation::counter_dec(rng.uniform(1, 4));
    case LatticeKind::GSet:
      return Mutation::set_add(random_element(rng));
    case LatticeKind::OrSet:
      return rng.chance(0.7) ? Mutation::set_add(random_element(rng))
                             : Mutation::set_remove(random_element(rng));
    case LatticeKind::LwwRegister:
      return Mutation::register_set(random_element(rng));
  }
  return Mutation::counter_inc(1);
}

CausalContext random_context(Rng& rng) {
  CausalContext cc;
  for (const ReplicaId& r : kReplicas) {
    const std::uint64_t upto = rng.uniform(0, 3);
    for (std::uint64_t s = 1; s <= upto; ++s) cc.insert(Dot(r, s));
    if (rng.chance(0.4)) cc.insert(Dot(r, rng.uniform(1, 6)));
  }
  return cc;
}

namespace {

GCounter random_gcounter(Rng& rng) {
  GCounter c;
  for (const ReplicaId& r : kReplicas)
    if (rng.chance(0.6)) c = c.incremented(r, rng.uniform(1, 5));
  return c;
}

LatticeValue random_single(LatticeKind kind, Rng& rng) {
  switch (kind) {
    case LatticeKind::GCounter:
      return LatticeValue(random_gcounter(rng));
    case LatticeKind::PnCounter: {
      PnCounter pn;
      const GCounter pos = random_gcounter(rng);
      const GCounter neg = random_gcounter(rng);
      for (const auto& [r, n] : pos.entries()) pn = pn.incremented(r, n);
      for (const auto& [r, n] : neg.entries()) pn = pn.decremented(r, n);
      return LatticeValue(std::move(pn));
    }
    case LatticeKind::GSet: {
      GSet s;
      const int n = static_cast<int>(rng.uniform(0, 4));
      for (int i = 0; i < n; ++i) s = s.added(random_element(rng));
      return LatticeValue(std::move(s));
    }
    case LatticeKind::LwwRegister: {
      if (rng.chance(0.15)) return LatticeValue(LwwRegister{});
      // Small counter range on purpose: ties must resolve commutatively.
      return LatticeValue(LwwRegister::from_parts(
          rng.uniform(1, 3),
          kReplicas[static_cast<std::size_t>(rng.uniform(0, 2))],
          random_element(rng)));
    }
    case LatticeKind::OrSet:
      return LatticeValue(random_orset_family(rng, 1).front());
  }
  return bottom(kind);
}

}  // namespace

std::vector<LatticeValue> random_value_family(LatticeKind kind, Rng& rng,
                                              int count) {
  std::vector<LatticeValue> out;
  if (kind == LatticeKind::OrSet) {
    for (OrSet& s : random_orset_family(rng, count))
      out.push_back(LatticeValue(std::move(s)));
    return out;
  }
  for (int i = 0; i < count; ++i) out.push_back(random_single(kind, rng));
  return out;
}

namespace {

constexpr std::array<LatticeKind, 5> kAllKinds = {
    LatticeKind::GCounter, LatticeKind::PnCounter, LatticeKind::GSet,
    LatticeKind::OrSet, LatticeKind::LwwRegister};

class Suite {
 public:
  Suite(std::string name, std::uint64_t iterations, std::uint64_t seed)
      : rng_(seed) {
    result_.name = std::move(name);
    result_.iterations = iterations;
  }

  void run(const std::function<bool(Rng&, std::string&)>& property) {
    for (std::uint64_t i = 0; i < result_.iterations; ++i) {
      std::string why;
      if (!property(rng_, why)) {
        ++result_.failures;
        if (result_.first_failure.empty())
          result_.first_failure =
              "iteration " + std::to_string(i) + (why.empty() ? "" : ": " + why);
      }
    }
  }

  LawResult result() { return result_; }

 private:
  Rng rng_;
  LawResult result_;
};

bool orset_representation_ok(const OrSet& s) {
  for (const auto& [dot, elem] : s.entries())
    if (!s.context().contains(dot)) return false;
  return true;
}

const std::array<std::string, 4> kLawFns = {"identity", "scale(3)", "second",
                                            "pair_with(7)"};
const std::array<std::string, 4> kLawPreds = {"always_true", "gt(2)",
                                              "eq(\"x\")", "second_gt(4.0)"};

}  // namespace

std::vector<LawResult> run_law_suites(std::uint64_t iterations,
                                      std::uint64_t seed) {
  std::vector<LawResult> results;
  std::uint64_t salt = 0;
  const auto suite = [&](const std::string& name,
                         const std::function<bool(Rng&, std::string&)>& prop) {
    Suite s(name, iterations, seed ^ (0x9e3779b97f4a7c15ULL * ++salt));
    s.run(prop);
    results.push_back(s.result());
  };

  for (LatticeKind kind : kAllKinds) {
    const std::string kname(to_string(kind));
    suite("lattice/aci-identity/" + kname, [kind](Rng& rng, std::string& why) {
      const auto vals = random_value_family(kind, rng, 3);
      const LatticeValue &a = vals[0], &b = vals[1], &c = vals[2];
      if (!(join(a, a) == a)) return why = "idempotence", false;
      if (!(join(a, b) == join(b, a))) return why = "commutativity", false;
      if (!(join(a, join(b, c)) == join(join(a, b), c)))
        return why = "associativity", false;
      if (!(join(bottom(kind), a) == a)) return why = "identity", false;
      return true;
    });

    suite("lattice/order-coherence/" + kname, [kind](Rng& rng, std::string& why) {
      auto vals = random_value_family(kind, rng, 2);
      if (rng.chance(0.3)) vals[1] = vals[0];  // force comparable states often
      const LatticeValue &a = vals[0], &b = vals[1];
      if (!leq(a, a)) return why = "reflexivity", false;
      if (leq(a, b) && leq(b, a) && !(a == b)) return why = "antisymmetry", false;
      return true;
    });

    suite("lattice/mutator-monotone/" + kname, [kind](Rng& rng, std::string& why) {
      const auto vals = random_value_family(kind, rng, 1);
      const Mutation m = random_mutation(kind, rng);
      const ReplicaId actor = replica_name(static_cast<int>(rng.uniform(0, 2)));
      const LatticeValue next = apply_mutation(vals[0], m, actor);
      if (!leq(vals[0], next)) return why = "state regressed", false;
      return true;
    });
  }

  suite("orset/representation", [](Rng& rng, std::string& why) {
    auto family = random_orset_family(rng, 2);
    OrSet s = family[0];
    for (int i = 0; i < 3; ++i) {
      const Mutation m = random_mutation(LatticeKind::OrSet, rng);
      const ReplicaId actor = replica_name(static_cast<int>(rng.uniform(0, 2)));
      s = m.kind == Mutation::Kind::SetAdd ? s.add(actor, m.value)
                                           : s.remove(m.value);
      if (!orset_representation_ok(s)) return why = "after mutation", false;
    }
    s = s.joined(family[1]);
    if (!orset_representation_ok(s)) return why = "after join", false;
    return true;
  });

  suite("causality/merge-aci-identity", [](Rng& rng, std::string& why) {
    const CausalContext a = random_context(rng);
    const CausalContext b = random_context(rng);
    const CausalContext c = random_context(rng);
    if (!(a.merged(a) == a)) return why = "idempotence", false;
    if (!(a.merged(b) == b.merged(a))) return why = "commutativity", false;
    if (!(a.merged(b.merged(c)) == a.merged(b).merged(c)))
      return why = "associativity", false;
    if (!(CausalContext{}.merged(a) == a)) return why = "identity", false;
    return true;
  });

  suite("causality/contains-coherence", [](Rng& rng, std::string& why) {
    const CausalContext a = random_context(rng);
    const CausalContext b = random_context(rng);
    const CausalContext m = a.merged(b);
    for (const ReplicaId& r : kReplicas) {
      for (std::uint64_t s = 1; s <= 7; ++s) {
        const Dot d(r, s);
        if (m.contains(d) != (a.contains(d) || b.contains(d)))
          return why = "dot " + r.id + ":" + std::to_string(s), false;
      }
    }
    return true;
  });

  suite("causality/normalization-canonical", [](Rng& rng, std::string& why) {
    // The same covered set, inserted in two shuffled orders, must produce
    // structurally identical contexts.
    const CausalContext reference = random_context(rng);
    std::vector<Dot> dots = reference.covered_dots();
    for (int pass = 0; pass < 2; ++pass) {
      rng.choose_prefix(dots, dots.size());
      CausalContext rebuilt;
      for (const Dot& d : dots) rebuilt.insert(d);
      if (!(rebuilt == reference)) return why = "rebuild differs", false;
    }
    return true;
  });

  suite("causality/vv-partial-order", [](Rng& rng, std::string& why) {
    const auto random_vv = [](Rng& r) {
      VersionVector vv;
      for (const ReplicaId& rep : kReplicas) {
        const std::uint64_t n = r.uniform(0, 3);
        if (n > 0) vv.advance_to(rep, n);
      }
      return vv;
    };
    const VersionVector a = random_vv(rng);
    const VersionVector b = random_vv(rng);
    const VersionVector c = a.merged(b);  // a <= c and b <= c by construction
    if (a.compare(a) != VvOrder::Equal) return why = "reflexivity", false;
    const VvOrder ab = a.compare(b);
    const VvOrder ba = b.compare(a);
    if ((ab == VvOrder::Before) != (ba == VvOrder::After))
      return why = "antisymmetry", false;
    if (ab == VvOrder::Equal && !(a == b)) return why = "equal means equal", false;
    const VvOrder ac = a.compare(c);
    if (ac != VvOrder::Equal && ac != VvOrder::Before)
      return why = "merge not above", false;
    return true;
  });

  suite("serialize/canonical-roundtrip", [](Rng& rng, std::string& why) {
    const LatticeKind kind =
        kAllKinds[static_cast<std::size_t>(rng.uniform(0, 4))];
    const LatticeValue v = random_value_family(kind, rng, 1).front();
    const LatticeValue back = lattice_value_from_json(to_json(v));
    if (!(back == v)) return why = "round-trip changed value", false;
    if (canonical_bytes(back) != canonical_bytes(v))
      return why = "bytes differ", false;
    if (canonical_bytes(join(v, v)) != canonical_bytes(v))
      return why = "join(x,x) bytes differ", false;
    return true;
  });

  suite("dataflow/map-homomorphism", [](Rng& rng, std::string& why) {
    const auto fam = random_orset_family(rng, 2);
    const ElementFn f = compile_fn(
        kLawFns[static_cast<std::size_t>(rng.uniform(0, kLawFns.size() - 1))]);
    if (!(df_map(fam[0].joined(fam[1]), f) ==
          df_map(fam[0], f).joined(df_map(fam[1], f))))
      return why = "map does not distribute", false;
    return true;
  });

  suite("dataflow/filter-homomorphism", [](Rng& rng, std::string& why) {
    const auto fam = random_orset_family(rng, 2);
    const ElementPred p = compile_pred(
        kLawPreds[static_cast<std::size_t>(rng.uniform(0, kLawPreds.size() - 1))]);
    if (!(df_filter(fam[0].joined(fam[1]), p) ==
          df_filter(fam[0], p).joined(df_filter(fam[1], p))))
      return why = "filter does not distribute", false;
    return true;
  });

  suite("dataflow/union-merge-coherence", [](Rng& rng, std::string& why) {
    const auto left = random_orset_family(rng, 2);
    const auto right = random_orset_family(rng, 2);
    const OrSet merged = df_union(left[0].joined(left[1]),
                                  right[0].joined(right[1]));
    const OrSet joined =
        df_union(left[0], right[0]).joined(df_union(left[1], right[1]));
    if (!(merged == joined)) return why = "union outputs differ", false;
    return true;
  });

  suite("dataflow/product-merge-coherence", [](Rng& rng, std::string& why) {
    // One input merged at a time, against a common other side.
    const auto left = random_orset_family(rng, 2);
    const auto right = random_orset_family(rng, 1);
    const OrSet& b = right[0];
    if (!(df_product(left[0].joined(left[1]), b) ==
          df_product(left[0], b).joined(df_product(left[1], b))))
      return why = "left merge differs", false;
    if (!(df_product(b, left[0].joined(left[1])) ==
          df_product(b, left[0]).joined(df_product(b, left[1]))))
      return why = "right merge differs", false;
    return true;
  });

  suite("dataflow/intersection-merge-coherence", [](Rng& rng, std::string& why) {
    const auto left = random_orset_family(rng, 2);
    const auto right = random_orset_family(rng, 1);
    const OrSet& b = right[0];
    if (!(df_intersection(left[0].joined(left[1]), b) ==
          df_intersection(left[0], b).joined(df_intersection(left[1], b))))
      return why = "left merge differs", false;
    return true;
  });

  suite("dataflow/propagate-fixpoint", [](Rng& rng, std::string&) {
    DataflowGraph g(ReplicaId("A"));
    g.declare_input(VarId("s"), LatticeKind::OrSet);
    g.declare_input(VarId("t"), LatticeKind::OrSet);
    g.declare_derived(VarId("m"), DfOp::Map, "scale(3)", {VarId("s")});
    g.declare_derived(VarId("u"), DfOp::Union, "", {VarId("s"), VarId("t")});
    g.declare_derived(VarId("p"), DfOp::Product, "", {VarId("s"), VarId("t")});
    g.declare_derived(VarId("n"), DfOp::FoldCount, "", {VarId("u")});
    const int ops = static_cast<int>(rng.uniform(0, 5));
    for (int i = 0; i < ops; ++i) {
      const VarId target = rng.chance(0.5) ? VarId("s") : VarId("t");
      g.update(target, random_mutation(LatticeKind::OrSet, rng));
    }
    g.propagate();
    const auto snapshot = g.store();
    g.propagate();
    return g.store() == snapshot;
  });

  suite("dataflow/convergence-transport", [](Rng& rng, std::string&) {
    const auto build = [](const ReplicaId& owner) {
      DataflowGraph g(owner);
      g.declare_input(VarId("s"), LatticeKind::OrSet);
      g.declare_derived(VarId("big"), DfOp::Filter, "gt(2)", {VarId("s")});
      g.declare_derived(VarId("count"), DfOp::FoldCount, "", {VarId("big")});
      return g;
    };
    DataflowGraph g1 = build(ReplicaId("A"));
    DataflowGraph g2 = build(ReplicaId("B"));
    for (int i = 0; i < 3; ++i) {
      g1.update(VarId("s"), random_mutation(LatticeKind::OrSet, rng));
      g2.update(VarId("s"), random_mutation(LatticeKind::OrSet, rng));
    }
    g1.merge_var(VarId("s"), g2.read(VarId("s")));
    g2.merge_var(VarId("s"), g1.read(VarId("s")));
    g1.propagate();
    g2.propagate();
    return g1.store() == g2.store();
  });

  return results;
}

bool all_passed(const std::vector<LawResult>& results) {
  for (const LawResult& r : results)
    if (!r.passed()) return false;
  return true;
}

}  // namespace latticeflow

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

#include "latticeflow/confluence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "latticeflow/serialize.hpp"

namespace latticeflow {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

int ops_per_kind(ConfluenceKind kind) {
  // OrSet: add/remove over a two-element universe. PnCounter: inc/dec by 1.
  return kind == ConfluenceKind::OrSet ? 4 : 2;
}

// Applies scripted op `op_index` for `kind` at `replica`, on that replica's
// current state.
LatticeValue apply_op(ConfluenceKind kind, int op_index,
                      const LatticeValue& state, const ReplicaId& replica) {
  static const Element kX = Element::of_string("x");
  static const Element kY = Element::of_string("y");
  if (kind == ConfluenceKind::OrSet) {
    const OrSet& s = state.as_orset();
    switch (op_index) {
      case 0:
        return LatticeValue(s.add(replica, kX));
      case 1:
        return LatticeValue(s.add(replica, kY));
      case 2:
        return LatticeValue(s.remove(kX));
      case 3:
        return LatticeValue(s.remove(kY));
    }
  } else {
    const PnCounter& c = state.as_pncounter();
    switch (op_index) {
      case 0:
        return LatticeValue(c.incremented(replica, 1));
      case 1:
        return LatticeValue(c.decremented(replica, 1));
    }
  }
  throw std::invalid_argument("op index out of range");
}

struct ScriptRun {
  std::vector<LatticeValue> snapshots;  // one per mutation, in script order
  LatticeValue reference;               // join of final local states
};

ScriptRun run_script(ConfluenceKind kind, const std::vector<int>& slots,
                     int replicas, int num_ops) {
  const LatticeKind lattice_kind = kind == ConfluenceKind::OrSet
                                       ? LatticeKind::OrSet
                                       : LatticeKind::PnCounter;
  std::vector<LatticeValue> locals(static_cast<std::size_t>(replicas),
                                   bottom(lattice_kind));
  std::vector<ReplicaId> ids;
  for (int r = 0; r < replicas; ++r) ids.push_back(replica_name(r));

  ScriptRun run{{}, bottom(lattice_kind)};
  for (int slot : slots) {
    const int replica = slot / num_ops;
    const int op = slot % num_ops;
    locals[replica] = apply_op(kind, op, locals[replica], ids[replica]);
    run.snapshots.push_back(locals[replica]);
  }
  for (const LatticeValue& v : locals) run.reference = join(run.reference, v);
  return run;
}

}  // namespace

std::uint64_t expected_confluence_sequences(ConfluenceKind kind, int max_ops,
                                            int replicas) {
  const std::uint64_t choices =
      static_cast<std::uint64_t>(ops_per_kind(kind)) *
      static_cast<std::uint64_t>(replicas);
  std::uint64_t total = 0;
  std::uint64_t scripts_of_k = 1;
  for (int k = 1; k <= max_ops; ++k) {
    scripts_of_k *= choices;
    const std::uint64_t per_script =
        factorial(k) +
        static_cast<std::uint64_t>(k) * (factorial(k + 1) / 2);
    total += scripts_of_k * per_script;
  }
  return total;
}

ConfluenceReport fuzz_confluence(ConfluenceKind kind, int max_ops, int replicas) {
  if (max_ops < 1 || max_ops > 5)
    throw std::invalid_argument("max_ops must be in [1, 5]");
  if (replicas < 1 || replicas > 4)
    throw std::invalid_argument("replicas must be in [1, 4]");

  const int num_ops = ops_per_kind(kind);
  const int choices = num_ops * replicas;
  const LatticeKind lattice_kind = kind == ConfluenceKind::OrSet
                                       ? LatticeKind::OrSet
                                       : LatticeKind::PnCounter;
  ConfluenceReport report;

  const auto check_sequence = [&](const ScriptRun& run,
                                  const std::vector<int>& order,
                                  const std::vector<int>& slots) {
    LatticeValue acc = bottom(lattice_kind);
    for (int idx : order) acc = join(acc, run.snapshots[idx]);
    ++report.sequences;
    if (!(acc == run.reference)) {
      ++report.failures;
      if (report.first_failure.empty()) {
        std::string desc = "script [";
        for (std::size_t i = 0; i < slots.size(); ++i) {
          if (i) desc += " ";
          desc += std::to_string(slots[i]);
        }
        desc += "] order [";
        for (std::size_t i = 0; i < order.size(); ++i) {
          if (i) desc += " ";
          desc += std::to_string(order[i]);
        }
        desc += "] got " + canonical_bytes(acc) + " want " +
                canonical_bytes(run.reference);
        report.first_failure = desc;
      }
    }
  };

  for (int k = 1; k <= max_ops; ++k) {
    std::vector<int> slots(static_cast<std::size_t>(k), 0);
    while (true) {
      const ScriptRun run = run_script(kind, slots, replicas, num_ops);
      ++report.scripts;

      // Every permutation of the k snapshots.
      std::vector<int> order(static_cast<std::size_t>(k));
      std::iota(order.begin(), order.end(), 0);
      do {
        check_sequence(run, order, slots);
      } while (std::next_permutation(order.begin(), order.end()));

      // Plus one duplicated message: for each choice of duplicate, every
      // distinct permutation of the resulting multiset.
      for (int dup = 0; dup < k; ++dup) {
        std::vector<int> with_dup(order.begin(), order.end());
        with_dup.push_back(dup);
        std::sort(with_dup.begin(), with_dup.end());
        do {
          check_sequence(run, with_dup, slots);
        } while (std::next_permutation(with_dup.begin(), with_dup.end()));
      }

      // Advance the script odometer.
      int pos = k - 1;
      while (pos >= 0 && slots[pos] == choices - 1) {
        slots[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++slots[pos];
    }
  }
  return report;
}

}  // namespace latticeflow

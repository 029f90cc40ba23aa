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

#ifndef LATTICEFLOW_LATTICE_VALUE_HPP_
#define LATTICEFLOW_LATTICE_VALUE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "latticeflow/lattices.hpp"
#include "latticeflow/orset.hpp"

namespace latticeflow {

enum class LatticeKind { GCounter, PnCounter, GSet, OrSet, LwwRegister };

std::string_view to_string(LatticeKind kind);
std::optional<LatticeKind> lattice_kind_from(std::string_view name);

// Tagged union over the supported CRDT types; the unit of replication and
// join. Join and order are only defined between identical variants.
class LatticeValue {
 public:
  LatticeValue(GCounter v) : v_(std::move(v)) {}
  LatticeValue(PnCounter v) : v_(std::move(v)) {}
  LatticeValue(GSet v) : v_(std::move(v)) {}
  LatticeValue(OrSet v) : v_(std::move(v)) {}
  LatticeValue(LwwRegister v) : v_(std::move(v)) {}

  LatticeKind kind() const { return static_cast<LatticeKind>(v_.index()); }

  const GCounter& as_gcounter() const;
  const PnCounter& as_pncounter() const;
  const GSet& as_gset() const;
  const OrSet& as_orset() const;
  const LwwRegister& as_lww() const;

  bool operator==(const LatticeValue&) const = default;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& vis) const {
    return std::visit(std::forward<Visitor>(vis), v_);
  }

 private:
  std::variant<GCounter, PnCounter, GSet, OrSet, LwwRegister> v_;
};

// Join identity of the given kind: join(bottom(k), x) == x for every x of k.
LatticeValue bottom(LatticeKind kind);

// Least upper bound. Throws std::invalid_argument on a variant mismatch —
// cross-variant joins are programming errors, not coercions.
LatticeValue join(const LatticeValue& a, const LatticeValue& b);

// Lattice order: true iff join(a, b) == b. Same-variant precondition.
bool leq(const LatticeValue& a, const LatticeValue& b);

// One scripted state change, uniform across lattice kinds so that scenario
// scripts and simulator traces can carry it. `replica` is the acting owner.
struct Mutation {
  enum class Kind { CounterInc, CounterDec, SetAdd, SetRemove, RegisterSet };

  Kind kind = Kind::CounterInc;
  std::uint64_t amount = 1;  // counters
  Element value{};           // sets and registers

  static Mutation counter_inc(std::uint64_t amount = 1);
  static Mutation counter_dec(std::uint64_t amount = 1);
  static Mutation set_add(Element e);
  static Mutation set_remove(Element e);
  static Mutation register_set(Element e);
};

std::string_view to_string(Mutation::Kind kind);

// Applies a mutation on behalf of `actor`. Throws std::invalid_argument when
// the mutation does not fit the value's kind.
LatticeValue apply_mutation(const LatticeValue& value, const Mutation& m,
                            const ReplicaId& actor);

}  // namespace latticeflow

#endif  // LATTICEFLOW_LATTICE_VALUE_HPP_

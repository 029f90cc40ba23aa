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

#ifndef LATTICEFLOW_LATTICES_HPP_
#define LATTICEFLOW_LATTICES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "latticeflow/element.hpp"
#include "latticeflow/replica_id.hpp"

namespace latticeflow {

// Grow-only counter: per-replica counts joined by pointwise max. Zero counts
// are never stored, so equal values are structurally equal.
class GCounter {
 public:
  GCounter incremented(const ReplicaId& r, std::uint64_t amount) const;
  GCounter joined(const GCounter& other) const;
  std::uint64_t value() const;

  const std::map<ReplicaId, std::uint64_t>& entries() const { return entries_; }

  bool operator==(const GCounter&) const = default;

 private:
  std::map<ReplicaId, std::uint64_t> entries_;
};

// Product lattice of two grow-only counters; value = positive - negative.
class PnCounter {
 public:
  PnCounter incremented(const ReplicaId& r, std::uint64_t amount) const;
  PnCounter decremented(const ReplicaId& r, std::uint64_t amount) const;
  PnCounter joined(const PnCounter& other) const;
  std::int64_t value() const;

  const GCounter& positive() const { return positive_; }
  const GCounter& negative() const { return negative_; }

  bool operator==(const PnCounter&) const = default;

 private:
  GCounter positive_;
  GCounter negative_;
};

// Grow-only set; join is union.
class GSet {
 public:
  GSet added(Element e) const;
  GSet joined(const GSet& other) const;
  bool contains(const Element& e) const { return elements_.count(e) > 0; }

  const std::set<Element>& elements() const { return elements_; }

  bool operator==(const GSet&) const = default;

 private:
  std::set<Element> elements_;
};

// Last-writer-wins register ordered by (counter, replica); the larger
// timestamp's value survives a join. Default-constructed is the unset bottom.
// Ties beyond (counter, replica) break on the value order so the join stays
// commutative for arbitrary states.
class LwwRegister {
 public:
  bool has_value() const { return value_.has_value(); }
  const Element& value() const;  // throws if unset
  std::uint64_t counter() const { return counter_; }
  const ReplicaId& replica() const { return replica_; }

  LwwRegister written(const ReplicaId& r, Element v) const;
  LwwRegister joined(const LwwRegister& other) const;

  static LwwRegister from_parts(std::uint64_t counter, ReplicaId replica,
                                std::optional<Element> value);

  bool operator==(const LwwRegister&) const = default;

 private:
  std::uint64_t counter_ = 0;
  ReplicaId replica_{};
  std::optional<Element> value_{};
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_LATTICES_HPP_

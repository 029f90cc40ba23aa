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

#ifndef LATTICEFLOW_CAUSALITY_HPP_
#define LATTICEFLOW_CAUSALITY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "latticeflow/replica_id.hpp"

namespace latticeflow {

// One event: the `sequence`-th mutation performed by `replica`. sequence >= 1.
struct Dot {
  ReplicaId replica;
  std::uint64_t sequence = 0;

  Dot() = default;
  Dot(ReplicaId r, std::uint64_t s) : replica(std::move(r)), sequence(s) {}

  auto operator<=>(const Dot&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Dot& d) {
  return os << d.replica << ":" << d.sequence;
}

enum class VvOrder { Equal, Before, After, Concurrent };

// Per-replica maximum contiguous sequence observed. Entry r -> n covers all
// dots (r,1)..(r,n); absent means none. Zero entries are never stored, so
// structurally equal vectors cover equal dot sets.
class VersionVector {
 public:
  std::uint64_t get(const ReplicaId& r) const {
    auto it = entries_.find(r);
    return it == entries_.end() ? 0 : it->second;
  }

  bool contains(const Dot& d) const { return d.sequence <= get(d.replica); }

  // Raises the entry for r to n if it is below. n must be >= 1.
  void advance_to(const ReplicaId& r, std::uint64_t n);

  void merge_in(const VersionVector& other);
  VersionVector merged(const VersionVector& other) const;

  VvOrder compare(const VersionVector& other) const;

  const std::map<ReplicaId, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint64_t covered_count() const;

  bool operator==(const VersionVector&) const = default;

 private:
  std::map<ReplicaId, std::uint64_t> entries_;
};

// Summary of all observed event dots: a compact version vector plus a cloud
// of non-contiguous extras. Eagerly normalized, so two contexts covering the
// same dot set are structurally equal.
class CausalContext {
 public:
  bool contains(const Dot& d) const {
    return compact_.contains(d) || cloud_.count(d) > 0;
  }

  // Next event for r and the context that already includes it. Reading the
  // local context (rather than a separate counter) means a replica resuming
  // from merged state never reuses a dot.
  std::pair<Dot, CausalContext> allocate(const ReplicaId& r) const;

  CausalContext with_dot(const Dot& d) const;
  CausalContext merged(const CausalContext& other) const;
  void insert(const Dot& d);
  void merge_in(const CausalContext& other);

  // Builds from raw parts and normalizes.
  static CausalContext from_parts(VersionVector compact, std::set<Dot> cloud);

  const VersionVector& compact() const { return compact_; }
  const std::set<Dot>& cloud() const { return cloud_; }
  bool empty() const { return compact_.empty() && cloud_.empty(); }

  std::uint64_t covered_count() const {
    return compact_.covered_count() + cloud_.size();
  }
  // Every covered dot, in (replica, sequence) order. Contexts in this
  // codebase stay small; callers may enumerate freely.
  std::vector<Dot> covered_dots() const;

  bool operator==(const CausalContext&) const = default;

 private:
  void normalize();

  VersionVector compact_;
  std::set<Dot> cloud_;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_CAUSALITY_HPP_

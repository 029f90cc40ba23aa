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

#include "latticeflow/causality.hpp"

#include <stdexcept>

namespace latticeflow {

void VersionVector::advance_to(const ReplicaId& r, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("version vector entries start at 1");
  auto [it, inserted] = entries_.emplace(r, n);
  if (!inserted && it->second < n) it->second = n;
}

void VersionVector::merge_in(const VersionVector& other) {
  for (const auto& [r, n] : other.entries_) advance_to(r, n);
}

VersionVector VersionVector::merged(const VersionVector& other) const {
  VersionVector out = *this;
  out.merge_in(other);
  return out;
}

VvOrder VersionVector::compare(const VersionVector& other) const {
  bool self_le = true;
  bool other_le = true;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      self_le = false;  // a has a replica b lacks
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      other_le = false;
      ++b;
    } else {
      if (a->second > b->second) self_le = false;
      if (b->second > a->second) other_le = false;
      ++a;
      ++b;
    }
  }
  if (self_le && other_le) return VvOrder::Equal;
  if (self_le) return VvOrder::Before;
  if (other_le) return VvOrder::After;
  return VvOrder::Concurrent;
}

std::uint64_t VersionVector::covered_count() const {
  std::uint64_t total = 0;
  for (const auto& [r, n] : entries_) total += n;
  return total;
}

void CausalContext::normalize() {
  auto it = cloud_.begin();
  while (it != cloud_.end()) {
    const std::uint64_t have = compact_.get(it->replica);
    if (it->sequence <= have) {
      it = cloud_.erase(it);
    } else if (it->sequence == have + 1) {
      // Cloud is ordered by (replica, sequence), so absorbing this dot may
      // make the immediately following dot contiguous too; one pass suffices.
      compact_.advance_to(it->replica, it->sequence);
      it = cloud_.erase(it);
    } else {
      ++it;
    }
  }
}

std::pair<Dot, CausalContext> CausalContext::allocate(const ReplicaId& r) const {
  Dot dot(r, compact_.get(r) + 1);
  return {dot, with_dot(dot)};
}

CausalContext CausalContext::with_dot(const Dot& d) const {
  CausalContext out = *this;
  out.insert(d);
  return out;
}

void CausalContext::insert(const Dot& d) {
  if (d.sequence == 0) throw std::invalid_argument("dot sequences start at 1");
  if (contains(d)) return;
  cloud_.insert(d);
  normalize();
}

void CausalContext::merge_in(const CausalContext& other) {
  compact_.merge_in(other.compact_);
  for (const Dot& d : other.cloud_) cloud_.insert(d);
  normalize();
}

CausalContext CausalContext::merged(const CausalContext& other) const {
  CausalContext out = *this;
  out.merge_in(other);
  return out;
}

CausalContext CausalContext::from_parts(VersionVector compact,
                                        std::set<Dot> cloud) {
  for (const Dot& d : cloud) {
    if (d.sequence == 0)
      throw std::invalid_argument("dot sequences start at 1");
  }
  CausalContext out;
  out.compact_ = std::move(compact);
  out.cloud_ = std::move(cloud);
  out.normalize();
  return out;
}

std::vector<Dot> CausalContext::covered_dots() const {
  std::vector<Dot> out;
  out.reserve(covered_count());
  auto cloud_it = cloud_.begin();
  for (const auto& [r, n] : compact_.entries()) {
    while (cloud_it != cloud_.end() && cloud_it->replica < r) {
      out.push_back(*cloud_it);
      ++cloud_it;
    }
    for (std::uint64_t s = 1; s <= n; ++s) out.emplace_back(r, s);
    while (cloud_it != cloud_.end() && cloud_it->replica == r) {
      out.push_back(*cloud_it);
      ++cloud_it;
    }
  }
  while (cloud_it != cloud_.end()) {
    out.push_back(*cloud_it);
    ++cloud_it;
  }
  return out;
}

}  // namespace latticeflow

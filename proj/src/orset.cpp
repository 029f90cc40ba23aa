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

#include "latticeflow/orset.hpp"

#include <stdexcept>

namespace latticeflow {

OrSet OrSet::add(const ReplicaId& r, Element e) const {
  auto [dot, next] = context_.allocate(r);
  OrSet out = *this;
  out.context_ = std::move(next);
  out.entries_.emplace(std::move(dot), std::move(e));
  return out;
}

OrSet OrSet::remove(const Element& e) const {
  OrSet out = *this;
  for (auto it = out.entries_.begin(); it != out.entries_.end();) {
    if (it->second == e)
      it = out.entries_.erase(it);
    else
      ++it;
  }
  return out;
}

OrSet OrSet::joined(const OrSet& other) const {
  OrSet out;
  out.context_ = context_.merged(other.context_);
  for (const auto& [dot, elem] : entries_) {
    if (other.entries_.count(dot) > 0 || !other.context_.contains(dot))
      out.entries_.emplace(dot, elem);
  }
  for (const auto& [dot, elem] : other.entries_) {
    if (out.entries_.count(dot) == 0 && !context_.contains(dot))
      out.entries_.emplace(dot, elem);
  }
  return out;
}

std::set<Element> OrSet::elements() const {
  std::set<Element> out;
  for (const auto& [dot, elem] : entries_) out.insert(elem);
  return out;
}

bool OrSet::contains(const Element& e) const {
  for (const auto& [dot, elem] : entries_)
    if (elem == e) return true;
  return false;
}

OrSet OrSet::from_parts(std::map<Dot, Element> entries, CausalContext context) {
  for (const auto& [dot, elem] : entries) {
    if (!context.contains(dot))
      throw std::invalid_argument("entry dot not covered by context");
  }
  OrSet out;
  out.entries_ = std::move(entries);
  out.context_ = std::move(context);
  return out;
}

}  // namespace latticeflow

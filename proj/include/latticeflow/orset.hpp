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

#ifndef LATTICEFLOW_ORSET_HPP_
#define LATTICEFLOW_ORSET_HPP_

#include <map>
#include <set>

#include "latticeflow/causality.hpp"
#include "latticeflow/element.hpp"

namespace latticeflow {

// Observed-remove set in the tombstone-free dotted representation: live
// entries keyed by the dot that created them, plus a causal context covering
// every dot this state has ever seen. A removal drops entries but keeps
// their dots in the context, which is what lets a join distinguish "removed"
// from "never seen" — concurrent adds survive (add-wins).
class OrSet {
 public:
  // Allocates the next dot for r from the local context and inserts (dot, e).
  OrSet add(const ReplicaId& r, Element e) const;

  // Drops every live entry equal to e; the context is unchanged. Removing an
  // absent element is a no-op on entries.
  OrSet remove(const Element& e) const;

  // Least upper bound. An entry survives unless the other side has seen its
  // dot and no longer carries it.
  OrSet joined(const OrSet& other) const;

  // Distinct element values among live entries.
  std::set<Element> elements() const;
  bool contains(const Element& e) const;

  const std::map<Dot, Element>& entries() const { return entries_; }
  const CausalContext& context() const { return context_; }

  // Assembles a set from raw parts; throws unless every entry dot is covered
  // by the context. Used by the dataflow operators, which build outputs over
  // renamed dot spaces.
  static OrSet from_parts(std::map<Dot, Element> entries, CausalContext context);

  bool operator==(const OrSet&) const = default;

 private:
  std::map<Dot, Element> entries_;
  CausalContext context_;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_ORSET_HPP_

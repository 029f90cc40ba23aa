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

#include "latticeflow/dataflow.hpp"

#include <stdexcept>
#include <string>

namespace latticeflow {

namespace {

// '#' and '|' delimit composite dots, ':' delimits union sides; escape them
// (plus the escape char itself) so renaming stays injective even for replica
// ids that already contain composite names.
std::string escape_id(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '%':
        out += "%%";
        break;
      case '#':
        out += "%h";
        break;
      case '|':
        out += "%p";
        break;
      case ':':
        out += "%c";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string left_prefix(const Dot& left) {
  return escape_id(left.replica.id) + "#" + std::to_string(left.sequence) + "|";
}

}  // namespace

Dot side_dot(int side, const Dot& d) {
  return Dot(ReplicaId(std::to_string(side) + ":" + escape_id(d.replica.id)),
             d.sequence);
}

CausalContext side_context(int side, const CausalContext& cc) {
  VersionVector compact;
  for (const auto& [r, n] : cc.compact().entries())
    compact.advance_to(side_dot(side, Dot(r, 1)).replica, n);
  std::set<Dot> cloud;
  for (const Dot& d : cc.cloud()) cloud.insert(side_dot(side, d));
  return CausalContext::from_parts(std::move(compact), std::move(cloud));
}

Dot composite_dot(const Dot& left, const Dot& right) {
  return Dot(ReplicaId(left_prefix(left) + escape_id(right.replica.id)),
             right.sequence);
}

CausalContext cross_context(const CausalContext& left,
                            const CausalContext& right) {
  // The composite context covers {(dl, dr) | dl in left, dr in right}. For a
  // fixed left dot the right coverage embeds wholesale, so the result stays
  // compact: one renamed copy of `right` per covered left dot.
  VersionVector compact;
  std::set<Dot> cloud;
  for (const Dot& dl : left.covered_dots()) {
    const std::string prefix = left_prefix(dl);
    for (const auto& [r, n] : right.compact().entries())
      compact.advance_to(ReplicaId(prefix + escape_id(r.id)), n);
    for (const Dot& dr : right.cloud())
      cloud.insert(
          Dot(ReplicaId(prefix + escape_id(dr.replica.id)), dr.sequence));
  }
  return CausalContext::from_parts(std::move(compact), std::move(cloud));
}

OrSet df_map(const OrSet& s, const ElementFn& f) {
  std::map<Dot, Element> entries;
  for (const auto& [dot, elem] : s.entries()) entries.emplace(dot, f(elem));
  return OrSet::from_parts(std::move(entries), s.context());
}

OrSet df_filter(const OrSet& s, const ElementPred& p) {
  std::map<Dot, Element> entries;
  for (const auto& [dot, elem] : s.entries())
    if (p(elem)) entries.emplace(dot, elem);
  return OrSet::from_parts(std::move(entries), s.context());
}

OrSet df_union(const OrSet& a, const OrSet& b) {
  std::map<Dot, Element> entries;
  for (const auto& [dot, elem] : a.entries())
    entries.emplace(side_dot(0, dot), elem);
  for (const auto& [dot, elem] : b.entries())
    entries.emplace(side_dot(1, dot), elem);
  return OrSet::from_parts(
      std::move(entries),
      side_context(0, a.context()).merged(side_context(1, b.context())));
}

OrSet df_intersection(const OrSet& a, const OrSet& b) {
  std::map<Dot, Element> entries;
  for (const auto& [da, ea] : a.entries())
    for (const auto& [db, eb] : b.entries())
      if (ea == eb) entries.emplace(composite_dot(da, db), ea);
  return OrSet::from_parts(std::move(entries),
                           cross_context(a.context(), b.context()));
}

OrSet df_product(const OrSet& a, const OrSet& b) {
  std::map<Dot, Element> entries;
  for (const auto& [da, ea] : a.entries())
    for (const auto& [db, eb] : b.entries())
      entries.emplace(composite_dot(da, db), Element::pair(ea, eb));
  return OrSet::from_parts(std::move(entries),
                           cross_context(a.context(), b.context()));
}

LwwRegister df_fold(const OrSet& s, FoldOp op, const ReplicaId& stamp) {
  const std::set<Element> elems = s.elements();
  Element result{};
  if (op == FoldOp::Count) {
    result = Element::of_int(static_cast<std::int64_t>(elems.size()));
  } else {
    std::int64_t int_sum = 0;
    double f64_sum = 0;
    bool any_float = false;
    for (const Element& e : elems) {
      if (!e.is_numeric())
        throw std::invalid_argument("fold-sum over non-numeric element " +
                                    e.to_literal());
      if (e.kind() == Element::Kind::Int) {
        int_sum = static_cast<std::int64_t>(static_cast<std::uint64_t>(int_sum) +
                                            static_cast<std::uint64_t>(e.as_int()));
        f64_sum += static_cast<double>(e.as_int());
      } else {
        any_float = true;
        f64_sum += e.as_f64();
      }
    }
    result = any_float ? Element::of_f64(f64_sum) : Element::of_int(int_sum);
  }
  // Timestamp derived from the input: covered dots grow on adds and merges,
  // dead dots (covered minus live) grow on removals, so any change to the
  // input strictly raises the counter and equal inputs stamp identically.
  const std::uint64_t counter =
      1 + 2 * s.context().covered_count() - s.entries().size();
  return LwwRegister::from_parts(counter, stamp, std::move(result));
}

}  // namespace latticeflow

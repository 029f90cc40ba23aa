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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "latticeflow/lattice_value.hpp"

namespace latticeflow {
namespace {

const ReplicaId A("A");
const ReplicaId B("B");

const Element X = Element::of_string("x");
const Element Y = Element::of_string("y");

// Brute-force delivery oracle: folds the given states in every permutation,
// and once more per choice of duplicated state, asserting a single fixed
// point. Returns that state.
LatticeValue unique_fixed_point(const std::vector<LatticeValue>& states) {
  std::vector<std::size_t> order(states.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<LatticeValue> results;
  const auto fold = [&](const std::vector<std::size_t>& seq) {
    LatticeValue acc = bottom(states.front().kind());
    for (std::size_t i : seq) acc = join(acc, states[i]);
    results.push_back(std::move(acc));
  };
  std::sort(order.begin(), order.end());
  do {
    fold(order);
  } while (std::next_permutation(order.begin(), order.end()));
  for (std::size_t dup = 0; dup < states.size(); ++dup) {
    std::vector<std::size_t> with_dup = order;
    with_dup.push_back(dup);
    std::sort(with_dup.begin(), with_dup.end());
    do {
      fold(with_dup);
    } while (std::next_permutation(with_dup.begin(), with_dup.end()));
  }
  for (const LatticeValue& r : results) EXPECT_EQ(r == results.front(), true);
  return results.front();
}

TEST(Bottom, JoinIdentities) {
  EXPECT_EQ(bottom(LatticeKind::GCounter).as_gcounter().value(), 0u);
  EXPECT_TRUE(bottom(LatticeKind::OrSet).as_orset().entries().empty());
  EXPECT_TRUE(bottom(LatticeKind::OrSet).as_orset().context().empty());
  EXPECT_TRUE(bottom(LatticeKind::GSet).as_gset().elements().empty());
  EXPECT_FALSE(bottom(LatticeKind::LwwRegister).as_lww().has_value());
}

TEST(Bottom, UnknownKindNameIsAnError) {
  EXPECT_FALSE(lattice_kind_from("counter").has_value());
  EXPECT_TRUE(lattice_kind_from("pncounter").has_value());
}

TEST(GCounterOps, IncrementExamples) {
  GCounter c;
  c = c.incremented(A, 1);
  EXPECT_EQ(c.value(), 1u);
  EXPECT_EQ(c.entries().at(A), 1u);
  c = c.incremented(A, 2);
  EXPECT_EQ(c.entries().at(A), 3u);
  c = c.incremented(B, 1);
  EXPECT_EQ(c.entries().at(A), 3u);
  EXPECT_EQ(c.entries().at(B), 1u);
}

TEST(GCounterOps, ZeroIncrementRejected) {
  EXPECT_THROW(GCounter{}.incremented(A, 0), std::invalid_argument);
}

TEST(GCounterOps, JoinIsPointwiseMax) {
  const GCounter left = GCounter{}.incremented(A, 2).incremented(B, 1);
  const GCounter right = GCounter{}.incremented(A, 1).incremented(B, 3);
  const GCounter joined = left.joined(right);
  EXPECT_EQ(joined.entries().at(A), 2u);
  EXPECT_EQ(joined.entries().at(B), 3u);
  EXPECT_EQ(joined.value(), 5u);
}

TEST(CounterValues, SumAndDifference) {
  const GCounter c = GCounter{}.incremented(A, 2).incremented(B, 3);
  EXPECT_EQ(c.value(), 5u);
  const PnCounter pn = PnCounter{}.incremented(A, 2).decremented(A, 3);
  EXPECT_EQ(pn.value(), -1);
  EXPECT_EQ(PnCounter{}.value(), 0);
}

TEST(Leq, BottomReflexivityIncomparable) {
  const LatticeValue a(GCounter{}.incremented(A, 1));
  const LatticeValue b(GCounter{}.incremented(B, 2));
  EXPECT_TRUE(leq(bottom(LatticeKind::GCounter), a));
  EXPECT_TRUE(leq(a, a));
  EXPECT_FALSE(leq(a, b));
  EXPECT_FALSE(leq(b, a));
}

TEST(Join, IdempotentOnEveryKind) {
  const LatticeValue values[] = {
      LatticeValue(GCounter{}.incremented(A, 2)),
      LatticeValue(PnCounter{}.incremented(A, 1).decremented(B, 2)),
      LatticeValue(GSet{}.added(X)),
      LatticeValue(OrSet{}.add(A, X)),
      LatticeValue(LwwRegister{}.written(A, Y)),
  };
  for (const LatticeValue& v : values) EXPECT_TRUE(join(v, v) == v);
}

TEST(Join, CrossVariantIsAnError) {
  EXPECT_THROW(join(bottom(LatticeKind::GCounter), bottom(LatticeKind::GSet)),
               std::invalid_argument);
  EXPECT_THROW(leq(bottom(LatticeKind::OrSet), bottom(LatticeKind::LwwRegister)),
               std::invalid_argument);
}

TEST(OrSetOps, AddAllocatesSequentialDots) {
  OrSet s;
  s = s.add(A, X);
  ASSERT_EQ(s.entries().size(), 1u);
  EXPECT_EQ(s.entries().begin()->first, Dot(A, 1));
  EXPECT_TRUE(s.context().contains(Dot(A, 1)));

  s = s.add(A, X);
  ASSERT_EQ(s.entries().size(), 2u);
  EXPECT_TRUE(s.entries().count(Dot(A, 1)));
  EXPECT_TRUE(s.entries().count(Dot(A, 2)));
  EXPECT_EQ(s.elements(), std::set<Element>{X});
}

TEST(OrSetOps, ConcurrentAddsBothSurvive) {
  const OrSet at_a = OrSet{}.add(A, X);
  const OrSet at_b = OrSet{}.add(B, X);
  const LatticeValue merged =
      unique_fixed_point({LatticeValue(at_a), LatticeValue(at_b)});
  const OrSet& s = merged.as_orset();
  EXPECT_EQ(s.entries().size(), 2u);
  EXPECT_TRUE(s.entries().count(Dot(A, 1)));
  EXPECT_TRUE(s.entries().count(Dot(B, 1)));
  EXPECT_EQ(s.elements(), std::set<Element>{X});
}

TEST(OrSetOps, RemoveFromEmptyIsNoop) {
  const OrSet s = OrSet{}.remove(X);
  EXPECT_TRUE(s.entries().empty());
  EXPECT_TRUE(s.context().empty());
}

TEST(OrSetOps, RemoveKeepsContext) {
  OrSet s = OrSet{}.add(A, X);
  s = s.remove(X);
  EXPECT_TRUE(s.entries().empty());
  EXPECT_TRUE(s.context().contains(Dot(A, 1)));  // tombstone-free removal
}

TEST(OrSetOps, AddWinsOverConcurrentRemove) {
  // A adds x, states sync, B removes x while A concurrently re-adds it.
  // The fixed point keeps x, carried only by A's second dot.
  OrSet at_a = OrSet{}.add(A, X);
  OrSet at_b = at_a;  // sync
  at_b = at_b.remove(X);
  at_a = at_a.add(A, X);

  const LatticeValue merged =
      unique_fixed_point({LatticeValue(at_a), LatticeValue(at_b)});
  const OrSet& s = merged.as_orset();
  EXPECT_EQ(s.elements(), std::set<Element>{X});
  EXPECT_EQ(s.entries().size(), 1u);
  EXPECT_TRUE(s.entries().count(Dot(A, 2)));
  EXPECT_FALSE(s.entries().count(Dot(A, 1)));
  EXPECT_TRUE(s.context().contains(Dot(A, 1)));
}

TEST(OrSetOps, ObservedRemoveWinsWhenNothingConcurrent) {
  OrSet at_a = OrSet{}.add(A, X);
  OrSet at_b = at_a;
  at_b = at_b.remove(X);
  const LatticeValue merged =
      unique_fixed_point({LatticeValue(at_a), LatticeValue(at_b)});
  EXPECT_TRUE(merged.as_orset().elements().empty());
}

TEST(OrSetOps, ElementsDeduplicatesValues) {
  EXPECT_TRUE(OrSet{}.elements().empty());
  OrSet s = OrSet{}.add(A, X).add(A, X);
  EXPECT_EQ(s.elements(), std::set<Element>{X});
  s = s.add(B, Y);
  EXPECT_EQ(s.elements(), (std::set<Element>{X, Y}));
}

TEST(OrSetOps, FromPartsRejectsUncoveredDot) {
  std::map<Dot, Element> entries;
  entries.emplace(Dot(A, 1), X);
  EXPECT_THROW(OrSet::from_parts(entries, CausalContext{}),
               std::invalid_argument);
}

TEST(LwwRegisterOps, LargerTimestampWins) {
  const LwwRegister first = LwwRegister{}.written(A, X);
  const LwwRegister second = first.written(B, Y);  // counter 2
  EXPECT_EQ(first.joined(second).value(), Y);
  EXPECT_EQ(second.joined(first).value(), Y);
}

TEST(LwwRegisterOps, CounterTieBreaksByReplica) {
  const LwwRegister at_a = LwwRegister{}.written(A, X);
  const LwwRegister at_b = LwwRegister{}.written(B, Y);
  EXPECT_EQ(at_a.counter(), at_b.counter());
  EXPECT_EQ(at_a.joined(at_b).value(), Y);  // B > A
  EXPECT_EQ(at_b.joined(at_a).value(), Y);
}

TEST(LwwRegisterOps, UnsetIsBottom) {
  const LwwRegister set = LwwRegister{}.written(A, X);
  EXPECT_EQ(LwwRegister{}.joined(set), set);
  EXPECT_EQ(set.joined(LwwRegister{}), set);
  EXPECT_THROW(LwwRegister{}.value(), std::invalid_argument);
  EXPECT_THROW(LwwRegister::from_parts(0, A, X), std::invalid_argument);
}

TEST(Mutations, MisfitsThrow) {
  EXPECT_THROW(apply_mutation(bottom(LatticeKind::GCounter),
                              Mutation::counter_dec(1), A),
               std::invalid_argument);
  EXPECT_THROW(apply_mutation(bottom(LatticeKind::GSet),
                              Mutation::set_remove(X), A),
               std::invalid_argument);
  EXPECT_THROW(apply_mutation(bottom(LatticeKind::OrSet),
                              Mutation::register_set(X), A),
               std::invalid_argument);
}

TEST(Mutations, MonotoneOnSamples) {
  const LatticeValue samples[] = {
      bottom(LatticeKind::GCounter), bottom(LatticeKind::PnCounter),
      bottom(LatticeKind::GSet),     bottom(LatticeKind::OrSet),
      bottom(LatticeKind::LwwRegister)};
  const Mutation muts[] = {Mutation::counter_inc(2), Mutation::counter_dec(1),
                           Mutation::set_add(X), Mutation::set_add(Y),
                           Mutation::register_set(X)};
  for (int i = 0; i < 5; ++i) {
    const LatticeValue next = apply_mutation(samples[i], muts[i], A);
    EXPECT_TRUE(leq(samples[i], next));
    EXPECT_FALSE(next == samples[i]);
  }
}

TEST(Element, FloatsCompareBitwise) {
  EXPECT_FALSE(Element::of_f64(0.0) == Element::of_f64(-0.0));
  EXPECT_TRUE(Element::of_f64(9.5) == Element::of_f64(9.5));
  EXPECT_FALSE(Element::of_int(4) == Element::of_f64(4.0));  // distinct kinds
  GSet s = GSet{}.added(Element::of_f64(0.0)).added(Element::of_f64(-0.0));
  EXPECT_EQ(s.elements().size(), 2u);
}

}  // namespace
}  // namespace latticeflow

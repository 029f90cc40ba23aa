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

#include <gtest/gtest.h>

#include <stdexcept>

namespace latticeflow {
namespace {

const ReplicaId A("A");
const ReplicaId B("B");
const ReplicaId C("C");

VersionVector vv(std::initializer_list<std::pair<ReplicaId, std::uint64_t>> xs) {
  VersionVector out;
  for (const auto& [r, n] : xs) out.advance_to(r, n);
  return out;
}

TEST(VersionVector, CompareDominance) {
  EXPECT_EQ(vv({{A, 1}}).compare(vv({{A, 2}})), VvOrder::Before);
  EXPECT_EQ(vv({{A, 2}}).compare(vv({{A, 1}})), VvOrder::After);
}

TEST(VersionVector, CompareConcurrent) {
  EXPECT_EQ(vv({{A, 1}}).compare(vv({{B, 1}})), VvOrder::Concurrent);
}

TEST(VersionVector, CompareEqual) {
  EXPECT_EQ(vv({{A, 2}, {B, 1}}).compare(vv({{A, 2}, {B, 1}})), VvOrder::Equal);
}

TEST(VersionVector, EmptyIsBelowEverything) {
  EXPECT_EQ(VersionVector{}.compare(vv({{A, 1}})), VvOrder::Before);
  EXPECT_EQ(VersionVector{}.compare(VersionVector{}), VvOrder::Equal);
}

TEST(VersionVector, ZeroEntriesRejected) {
  VersionVector v;
  EXPECT_THROW(v.advance_to(A, 0), std::invalid_argument);
}

TEST(CausalContext, AllocateFirstEvent) {
  const auto [dot, next] = CausalContext{}.allocate(A);
  EXPECT_EQ(dot, Dot(A, 1));
  EXPECT_EQ(next.compact().get(A), 1u);
  EXPECT_TRUE(next.cloud().empty());
}

TEST(CausalContext, AllocateSuccessor) {
  CausalContext cc;
  cc.insert(Dot(A, 1));
  cc.insert(Dot(A, 2));
  const auto [dot, next] = cc.allocate(A);
  EXPECT_EQ(dot, Dot(A, 3));
  EXPECT_EQ(next.compact().get(A), 3u);
}

TEST(CausalContext, AllocateFreshReplica) {
  CausalContext cc;
  cc.insert(Dot(A, 1));
  cc.insert(Dot(A, 2));
  const auto [dot, next] = cc.allocate(B);
  EXPECT_EQ(dot, Dot(B, 1));
  EXPECT_EQ(next.compact().get(A), 2u);
  EXPECT_EQ(next.compact().get(B), 1u);
}

TEST(CausalContext, ContainsCompactAndGaps) {
  CausalContext cc;
  cc.insert(Dot(A, 1));
  cc.insert(Dot(A, 2));
  EXPECT_TRUE(cc.contains(Dot(A, 1)));
  EXPECT_FALSE(cc.contains(Dot(A, 3)));

  CausalContext gappy;
  gappy.insert(Dot(A, 1));
  gappy.insert(Dot(A, 3));
  EXPECT_TRUE(gappy.contains(Dot(A, 3)));
  EXPECT_FALSE(gappy.contains(Dot(A, 2)));
  EXPECT_EQ(gappy.compact().get(A), 1u);
  EXPECT_EQ(gappy.cloud().size(), 1u);
}

TEST(CausalContext, MergeIdempotent) {
  CausalContext cc;
  cc.insert(Dot(A, 2));
  cc.insert(Dot(B, 1));
  EXPECT_EQ(cc.merged(cc), cc);
}

TEST(CausalContext, MergeCompactsAdjacentCloudDot) {
  CausalContext left;
  left.insert(Dot(A, 1));
  left.insert(Dot(A, 2));
  CausalContext right;
  right.insert(Dot(A, 3));  // sits in the cloud: nothing below it
  ASSERT_EQ(right.cloud().size(), 1u);

  const CausalContext merged = left.merged(right);
  EXPECT_EQ(merged.compact().get(A), 3u);
  EXPECT_TRUE(merged.cloud().empty());
}

TEST(CausalContext, MergeDisjointUnion) {
  CausalContext left;
  left.insert(Dot(A, 1));
  CausalContext right;
  right.insert(Dot(B, 1));
  right.insert(Dot(B, 2));
  const CausalContext merged = left.merged(right);
  EXPECT_EQ(merged.compact().get(A), 1u);
  EXPECT_EQ(merged.compact().get(B), 2u);
}

TEST(CausalContext, AllocateSkipsOverAbsorbedCloud) {
  // Allocating (A,2) next to cloud dot (A,3) compacts the run to A:3.
  CausalContext cc;
  cc.insert(Dot(A, 1));
  cc.insert(Dot(A, 3));
  const auto [dot, next] = cc.allocate(A);
  EXPECT_EQ(dot, Dot(A, 2));
  EXPECT_EQ(next.compact().get(A), 3u);
  EXPECT_TRUE(next.cloud().empty());
  const auto [dot2, next2] = next.allocate(A);
  EXPECT_EQ(dot2, Dot(A, 4));
  (void)next2;
}

TEST(CausalContext, ContainsMergeCoherenceExhaustive) {
  // Bounded dot universe: every context over {A,B} x 1..3, pairwise.
  std::vector<CausalContext> all;
  for (int mask = 0; mask < 64; ++mask) {
    CausalContext cc;
    int bit = 0;
    for (const ReplicaId& r : {A, B})
      for (std::uint64_t s = 1; s <= 3; ++s, ++bit)
        if (mask & (1 << bit)) cc.insert(Dot(r, s));
    all.push_back(std::move(cc));
  }
  for (const CausalContext& x : all) {
    for (const CausalContext& y : all) {
      const CausalContext m = x.merged(y);
      for (const ReplicaId& r : {A, B})
        for (std::uint64_t s = 1; s <= 4; ++s) {
          const Dot d(r, s);
          ASSERT_EQ(m.contains(d), x.contains(d) || y.contains(d));
        }
    }
  }
}

TEST(CausalContext, NormalizationIsCanonical) {
  // Same covered set, two different construction orders.
  CausalContext forward;
  for (std::uint64_t s = 1; s <= 4; ++s) forward.insert(Dot(A, s));
  forward.insert(Dot(B, 2));

  CausalContext backward;
  backward.insert(Dot(B, 2));
  for (std::uint64_t s = 4; s >= 1; --s) backward.insert(Dot(A, s));

  EXPECT_EQ(forward, backward);
  EXPECT_EQ(forward.compact().get(A), 4u);
  EXPECT_EQ(forward.cloud().size(), 1u);  // B:2 stays a gap
}

TEST(CausalContext, CoveredDotsEnumeratesInOrder) {
  CausalContext cc;
  cc.insert(Dot(B, 1));
  cc.insert(Dot(A, 1));
  cc.insert(Dot(A, 3));
  const std::vector<Dot> dots = cc.covered_dots();
  ASSERT_EQ(dots.size(), 3u);
  EXPECT_EQ(dots[0], Dot(A, 1));
  EXPECT_EQ(dots[1], Dot(A, 3));
  EXPECT_EQ(dots[2], Dot(B, 1));
  EXPECT_EQ(cc.covered_count(), 3u);
}

TEST(CausalContext, ZeroSequenceRejected) {
  CausalContext cc;
  EXPECT_THROW(cc.insert(Dot(A, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace latticeflow

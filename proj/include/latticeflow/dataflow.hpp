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

#ifndef LATTICEFLOW_DATAFLOW_HPP_
#define LATTICEFLOW_DATAFLOW_HPP_

#include "latticeflow/fn_registry.hpp"
#include "latticeflow/lattice_value.hpp"
#include "latticeflow/orset.hpp"

namespace latticeflow {

// Functional composition over observed-remove sets. Each operator keeps
// dot-level provenance — every output entry's dot identifies the input
// entries that produced it — which is what makes derived outputs of merged
// inputs equal the merge of derived outputs (computed per operator below).
//
// Binary operators rename dots into per-output namespaces so entries from
// distinct inputs can never collide:
//   union:        side tag,        dot (r, s)        -> ("0:r", s) / ("1:r", s)
//   intersection/product: dot pair ((rl, sl), (rr, sr)) -> ("rl#sl|rr", sr)
// Separator characters inside replica ids are escaped first, so the renaming
// is injective for any input.

// Entries mapped pointwise through f; dots and context preserved verbatim.
OrSet df_map(const OrSet& s, const ElementFn& f);

// Entries restricted to those satisfying p; context preserved verbatim, so
// upstream removals still dominate downstream copies after a merge.
OrSet df_filter(const OrSet& s, const ElementPred& p);

// Tagged union: both inputs embedded side by side.
OrSet df_union(const OrSet& a, const OrSet& b);

// An element is present iff it is live in both inputs; entries carry the
// witnessing dot pair.
OrSet df_intersection(const OrSet& a, const OrSet& b);

// Cartesian product of live entries; a pair is live iff both constituent
// dots are live in their inputs.
OrSet df_product(const OrSet& a, const OrSet& b);

enum class FoldOp { Sum, Count };

// Deterministically recomputed scalar view of a set: Count = number of
// distinct elements, Sum = sum of distinct element values (int unless any
// float contributes). The result is a register, not a merged lattice: it
// reflects this replica's partial view. Its timestamp is derived from the
// input state (strictly increasing under any input growth), so replicas
// with equal inputs hold structurally equal registers and repeated
// recomputation is a fixpoint. Throws on non-numeric elements under Sum.
LwwRegister df_fold(const OrSet& s, FoldOp op, const ReplicaId& stamp);

// Dot-renaming helpers, exposed for tests that check merge coherence at the
// namespaced-dot level.
Dot side_dot(int side, const Dot& d);
CausalContext side_context(int side, const CausalContext& cc);
Dot composite_dot(const Dot& left, const Dot& right);
CausalContext cross_context(const CausalContext& left,
                            const CausalContext& right);

}  // namespace latticeflow

#endif  // LATTICEFLOW_DATAFLOW_HPP_

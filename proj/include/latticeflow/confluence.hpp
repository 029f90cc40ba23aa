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

#ifndef LATTICEFLOW_CONFLUENCE_HPP_
#define LATTICEFLOW_CONFLUENCE_HPP_

#include <cstdint>
#include <string>

#include "latticeflow/lattice_value.hpp"

namespace latticeflow {

// Exhaustive small-instance confluence oracle.
//
// A script assigns each of k mutations (k = 1..max_ops) to one of R replicas;
// replicas execute their own mutations in script order in isolation and
// broadcast a full-state snapshot after each one. For every script, every
// delivery permutation of those snapshots — and, per duplicated-message
// choice, every distinct permutation with that snapshot delivered twice —
// is folded into a join accumulator, which must land on the single reference
// state (the join of all final local states) every time.
//
// Sequences per k-mutation script: k! + k * (k+1)! / 2.
struct ConfluenceReport {
  std::uint64_t scripts = 0;
  std::uint64_t sequences = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

enum class ConfluenceKind { OrSet, PnCounter };

// max_ops in [1, 5], replicas in [1, 4]; larger spaces are rejected with
// std::invalid_argument since the enumeration is exhaustive.
ConfluenceReport fuzz_confluence(ConfluenceKind kind, int max_ops, int replicas);

// The size of the enumerated sequence space, computed combinatorially.
std::uint64_t expected_confluence_sequences(ConfluenceKind kind, int max_ops,
                                            int replicas);

}  // namespace latticeflow

#endif  // LATTICEFLOW_CONFLUENCE_HPP_

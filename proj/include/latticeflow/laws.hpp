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

#ifndef LATTICEFLOW_LAWS_HPP_
#define LATTICEFLOW_LAWS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "latticeflow/lattice_value.hpp"
#include "latticeflow/rng.hpp"

namespace latticeflow {

// Randomized property suites over the lattice, causality, dataflow, and
// serialization layers, shared by the `laws` subcommand, the unit tests, and
// the acceptance suite.

struct LawResult {
  std::string name;
  std::uint64_t iterations = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

std::vector<LawResult> run_law_suites(std::uint64_t iterations,
                                      std::uint64_t seed);
bool all_passed(const std::vector<LawResult>& results);

// --- generators (exposed for tests) ---

Element random_element(Rng& rng, int max_depth = 1);

// Families of orset states drawn from one shared per-replica event history,
// so a dot maps to the same element in every family member — exactly the
// states a set of diverging replicas can reach.
std::vector<OrSet> random_orset_family(Rng& rng, int count);

// count states of the given kind; orsets share a history.
std::vector<LatticeValue> random_value_family(LatticeKind kind, Rng& rng,
                                              int count);

// A mutation that fits the kind, with random payload.
Mutation random_mutation(LatticeKind kind, Rng& rng);

CausalContext random_context(Rng& rng);

}  // namespace latticeflow

#endif  // LATTICEFLOW_LAWS_HPP_

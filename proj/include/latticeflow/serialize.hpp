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

#ifndef LATTICEFLOW_SERIALIZE_HPP_
#define LATTICEFLOW_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "latticeflow/causality.hpp"
#include "latticeflow/lattice_value.hpp"

namespace latticeflow {

// Insertion-ordered JSON; every encoder below inserts fields in a fixed
// order and emits map/set contents sorted by key, so two structurally equal
// values always serialize to identical bytes.
using Json = nlohmann::ordered_json;

// Elements are tagged arrays: ["i",5] ["f",9.5] ["s","x"] ["p",<el>,<el>].
// Non-finite floats fall back to ["fb","<hex bits>"] since JSON has no
// encoding for them; finite floats round-trip exactly through shortest-form
// decimal.
Json to_json(const Element& e);
Element element_from_json(const Json& j);

Json to_json(const VersionVector& vv);
VersionVector version_vector_from_json(const Json& j);

Json to_json(const CausalContext& cc);
CausalContext causal_context_from_json(const Json& j);

Json to_json(const LatticeValue& v);
LatticeValue lattice_value_from_json(const Json& j);

// Compact dump of to_json: the canonical byte form used by traces, reports,
// and convergence checks.
std::string canonical_bytes(const LatticeValue& v);

}  // namespace latticeflow

#endif  // LATTICEFLOW_SERIALIZE_HPP_

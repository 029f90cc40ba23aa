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

#ifndef LATTICEFLOW_FN_REGISTRY_HPP_
#define LATTICEFLOW_FN_REGISTRY_HPP_

#include <functional>
#include <string>

#include "latticeflow/element.hpp"

namespace latticeflow {

// Derived variables name their functions by textual id rather than holding
// code, so a graph spec can be serialized, shipped, and re-evaluated
// identically on every replica. The catalog is a fixed set of built-ins;
// every function is deterministic and total on the element universe.
//
// Transforms            Predicates
//   identity              always_true / always_false
//   scale(k)  numeric*k   gt(x) / lt(x)   numeric comparison
//   add(k)    numeric+k   eq(lit)         exact equality
//   pair_with(lit)        second_gt(x)    pair whose second is numeric > x
//   tag("label")
//   first / second
//
// Non-numeric inputs pass through scale/add unchanged; non-pair inputs pass
// through first/second unchanged; gt/lt/second_gt are false off-domain.
using ElementFn = std::function<Element(const Element&)>;
using ElementPred = std::function<bool(const Element&)>;

// Compiles an id like "scale(10)" or "gt(8.0)". Throws std::invalid_argument
// for ids outside the catalog or with malformed arguments.
ElementFn compile_fn(const std::string& fn_id);
ElementPred compile_pred(const std::string& pred_id);

bool is_known_fn(const std::string& fn_id);
bool is_known_pred(const std::string& pred_id);

}  // namespace latticeflow

#endif  // LATTICEFLOW_FN_REGISTRY_HPP_

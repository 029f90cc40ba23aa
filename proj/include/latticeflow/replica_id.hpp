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

#ifndef LATTICEFLOW_REPLICA_ID_HPP_
#define LATTICEFLOW_REPLICA_ID_HPP_

#include <compare>
#include <ostream>
#include <string>

namespace latticeflow {

// Identifies the replica that owns a mutation. Totally ordered, exact
// equality; the token itself is opaque.
struct ReplicaId {
  std::string id;

  ReplicaId() = default;
  explicit ReplicaId(std::string s) : id(std::move(s)) {}

  auto operator<=>(const ReplicaId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const ReplicaId& r) {
  return os << r.id;
}

// Spreadsheet-style names for generated node ids: A..Z, AA, AB, ...
inline ReplicaId replica_name(int index) {
  std::string s;
  int n = index;
  do {
    s.insert(s.begin(), static_cast<char>('A' + n % 26));
    n = n / 26 - 1;
  } while (n >= 0);
  return ReplicaId(s);
}

}  // namespace latticeflow

#endif  // LATTICEFLOW_REPLICA_ID_HPP_

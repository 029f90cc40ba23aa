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

#include "latticeflow/network.hpp"

#include <cmath>
#include <stdexcept>

namespace latticeflow {

void NetworkModel::validate() const {
  const auto in_unit = [](double p) {
    return std::isfinite(p) && p >= 0.0 && p <= 1.0;
  };
  if (!in_unit(drop_prob))
    throw std::invalid_argument("drop_prob must be in [0, 1]");
  if (!in_unit(dup_prob))
    throw std::invalid_argument("dup_prob must be in [0, 1]");
  if (max_delay_rounds < 0)
    throw std::invalid_argument("max_delay_rounds must be >= 0");
  for (const Partition& p : partitions) {
    if (p.from_round < 0 || p.to_round < p.from_round)
      throw std::invalid_argument("partition interval is malformed");
    if (p.side_a.empty() || p.side_b.empty())
      throw std::invalid_argument("partition sides must be non-empty");
    for (const ReplicaId& r : p.side_a)
      if (p.side_b.count(r))
        throw std::invalid_argument("partition sides must be disjoint");
  }
}

}  // namespace latticeflow

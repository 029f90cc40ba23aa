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

#ifndef LATTICEFLOW_NETWORK_HPP_
#define LATTICEFLOW_NETWORK_HPP_

#include <set>
#include <vector>

#include "latticeflow/replica_id.hpp"

namespace latticeflow {

// A bipartition active for rounds [from_round, to_round). Messages whose
// endpoints fall on opposite sides are discarded at send time; retransmission
// emerges from the next gossip round, so nothing is queued.
struct Partition {
  int from_round = 0;
  int to_round = 0;
  std::set<ReplicaId> side_a;
  std::set<ReplicaId> side_b;

  bool active_at(int round) const {
    return round >= from_round && round < to_round;
  }
  bool severs(int round, const ReplicaId& x, const ReplicaId& y) const {
    if (!active_at(round)) return false;
    return (side_a.count(x) && side_b.count(y)) ||
           (side_b.count(x) && side_a.count(y));
  }
};

struct NetworkModel {
  double drop_prob = 0.0;
  double dup_prob = 0.0;
  int max_delay_rounds = 0;
  std::vector<Partition> partitions;

  bool crosses_partition(int round, const ReplicaId& src,
                         const ReplicaId& dst) const {
    for (const Partition& p : partitions)
      if (p.severs(round, src, dst)) return true;
    return false;
  }

  // Throws std::invalid_argument on out-of-range probabilities or malformed
  // partition intervals.
  void validate() const;
};

}  // namespace latticeflow

#endif  // LATTICEFLOW_NETWORK_HPP_

// Copyright 2026 The unistat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unistat/max_flow.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace unistat {

MaxFlow::ArcIndex MaxFlow::add_arc(Node tail, Node head, Capacity capacity) {
  const auto index = static_cast<ArcIndex>(head_.size());
  head_.push_back(head);
  capacity_.push_back(capacity);
  first_out_[tail].push_back(index);
  head_.push_back(tail);
  capacity_.push_back(0);
  first_out_[head].push_back(index + 1);
  return index;
}

bool MaxFlow::build_levels(Node source, Node sink) {
  level_.assign(first_out_.size(), -1);
  level_[source] = 0;
  std::queue<Node> queue;
  queue.push(source);
  while (!queue.empty()) {
    const Node v = queue.front();
    queue.pop();
    for (ArcIndex a : first_out_[v]) {
      if (capacity_[a] > 0 && level_[head_[a]] < 0) {
        level_[head_[a]] = level_[v] + 1;
        queue.push(head_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::augment(Node v, Node sink, Capacity limit) {
  if (v == sink) return limit;
  for (std::size_t& i = next_arc_[v]; i < first_out_[v].size(); ++i) {
    const ArcIndex a = first_out_[v][i];
    const Node w = head_[a];
    if (capacity_[a] <= 0 || level_[w] != level_[v] + 1) continue;
    const Capacity pushed = augment(w, sink, std::min(limit, capacity_[a]));
    if (pushed > 0) {
      capacity_[a] -= pushed;
      capacity_[a ^ 1] += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::solve(Node source, Node sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    next_arc_.assign(first_out_.size(), 0);
    while (const Capacity pushed = augment(
               source, sink, std::numeric_limits<Capacity>::max())) {
      total += pushed;
    }
  }
  return total;
}

}  // namespace unistat

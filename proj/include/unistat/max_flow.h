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

#ifndef UNISTAT_MAX_FLOW_H_
#define UNISTAT_MAX_FLOW_H_

#include <cstdint>
#include <vector>

namespace unistat {

// Dinic's blocking-flow maximum flow on integer capacities.
class MaxFlow {
 public:
  using Node = std::int32_t;
  using ArcIndex = std::int32_t;
  using Capacity = std::int64_t;

  explicit MaxFlow(Node num_nodes) : first_out_(num_nodes) {}

  // Returns the index of the forward arc; its residual twin is index ^ 1.
  ArcIndex add_arc(Node tail, Node head, Capacity capacity);

  Capacity solve(Node source, Node sink);

  Capacity flow(ArcIndex arc) const { return capacity_[arc ^ 1]; }
  Node head(ArcIndex arc) const { return head_[arc]; }

 private:
  bool build_levels(Node source, Node sink);
  Capacity augment(Node v, Node sink, Capacity limit);

  std::vector<std::vector<ArcIndex>> first_out_;
  std::vector<Node> head_;
  std::vector<Capacity> capacity_;  // residual
  std::vector<std::int32_t> level_;
  std::vector<std::size_t> next_arc_;
};

}  // namespace unistat

#endif  // UNISTAT_MAX_FLOW_H_

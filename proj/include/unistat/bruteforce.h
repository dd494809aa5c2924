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

#ifndef UNISTAT_BRUTEFORCE_H_
#define UNISTAT_BRUTEFORCE_H_

// Exhaustive oracles for desk-scale instances. These share no code path with
// the testers or the flow-based reduction they are used to check.

#include <cstdint>
#include <optional>
#include <vector>

#include "unistat/graph.h"
#include "unistat/markov.h"

namespace unistat {

inline constexpr std::size_t kMaxBruteForceEdges = 20;
inline constexpr std::size_t kMaxLinearSolveVertices = 200;

enum class Target { kPropertyP, kEulerian };

struct DistanceResult {
  std::size_t num_edges = 0;
  // nullopt when no orientation of the underlying graph meets the target.
  std::optional<std::uint32_t> min_flips;
  std::vector<EdgeId> witness;  // flipping exactly these reaches the target

  bool reachable() const { return min_flips.has_value(); }
  // min_flips / m; requires reachable() and m > 0.
  Rational fraction() const;
};

// Minimum number of edge reversals that make g satisfy the target, by search
// over flip sets of increasing size. Throws CapExceeded if m > 20. For
// kPropertyP the underlying graph need not be degree-Delta; the edgewise
// condition is used as is.
DistanceResult distance_to(const OrientedGraph& g, Target target);

bool satisfies(const OrientedGraph& g, Target target);

// All 2^m orientations in lexicographic order, edge 0 most significant,
// Forward before Backward. A sub-range [first, last) may be requested to
// split work.
class OrientationEnumerator {
 public:
  // Throws CapExceeded if num_edges > 20.
  explicit OrientationEnumerator(std::size_t num_edges);
  OrientationEnumerator(std::size_t num_edges, std::uint64_t first,
                        std::uint64_t last);

  std::uint64_t total() const { return std::uint64_t{1} << num_edges_; }
  // Writes the next orientation; false once the range is exhausted.
  bool next(Orientation& out);

  static Orientation at(std::size_t num_edges, std::uint64_t index);

 private:
  std::size_t num_edges_;
  std::uint64_t current_;
  std::uint64_t last_;
};

// Solves pi T = pi with sum(pi) = 1 by exact Gaussian elimination. Returns
// nullopt if the system does not have a unique solution. Throws CapExceeded
// if n > 200 and WalkUndefined if some vertex has out-degree 0.
std::optional<ExactDistribution> stationary_linear_solve(
    const OrientedGraph& g);

}  // namespace unistat

#endif  // UNISTAT_BRUTEFORCE_H_

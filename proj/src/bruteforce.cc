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

#include "unistat/bruteforce.h"

#include <bit>
#include <stdexcept>
#include <string>

#include "unistat/errors.h"

namespace unistat {

namespace {

void check_edge_cap(std::size_t m) {
  if (m > kMaxBruteForceEdges) {
    throw CapExceeded("brute force refuses m = " + std::to_string(m) +
                      " > " + std::to_string(kMaxBruteForceEdges));
  }
}

// Degree recount kept local so this oracle does not lean on the code it
// checks.
struct Counts {
  std::vector<std::uint32_t> in;
  std::vector<std::uint32_t> out;
};

Counts count(const OrientedGraph& g) {
  Counts c{std::vector<std::uint32_t>(g.num_vertices(), 0),
           std::vector<std::uint32_t>(g.num_vertices(), 0)};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    ++c.out[a.tail];
    ++c.in[a.head];
  }
  return c;
}

}  // namespace

Rational DistanceResult::fraction() const {
  if (!min_flips || num_edges == 0) {
    throw std::logic_error("fraction of an unreachable or empty distance");
  }
  Rational f(*min_flips, static_cast<unsigned long>(num_edges));
  f.canonicalize();
  return f;
}

bool satisfies(const OrientedGraph& g, Target target) {
  const Counts c = count(g);
  if (target == Target::kEulerian) {
    return c.in == c.out;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (c.in[v] == 0 || c.out[v] == 0) return false;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    if (c.out[a.tail] != c.in[a.head]) return false;
  }
  return true;
}

DistanceResult distance_to(const OrientedGraph& g, Target target) {
  const std::size_t m = g.num_edges();
  check_edge_cap(m);
  DistanceResult result;
  result.num_edges = m;
  Orientation work = g.orientation();
  for (std::uint32_t k = 0; k <= m; ++k) {
    if (k == 0) {
      if (satisfies(g, target)) {
        result.min_flips = 0;
        return result;
      }
      continue;
    }
    // Gosper's hack over all k-subsets of m bits.
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
      for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
        work.flip(static_cast<EdgeId>(std::countr_zero(bits)));
      }
      const bool ok = satisfies(g.with_orientation(work), target);
      for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
        work.flip(static_cast<EdgeId>(std::countr_zero(bits)));
      }
      if (ok) {
        result.min_flips = k;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
          result.witness.push_back(
              static_cast<EdgeId>(std::countr_zero(bits)));
        }
        return result;
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return result;
}

OrientationEnumerator::OrientationEnumerator(std::size_t num_edges)
    : OrientationEnumerator(num_edges, 0,
                            std::uint64_t{1} << std::min<std::size_t>(
                                num_edges, 63)) {}

OrientationEnumerator::OrientationEnumerator(std::size_t num_edges,
                                             std::uint64_t first,
                                             std::uint64_t last)
    : num_edges_(num_edges), current_(first), last_(last) {
  check_edge_cap(num_edges);
  last_ = std::min(last_, total());
}

Orientation OrientationEnumerator::at(std::size_t num_edges,
                                      std::uint64_t index) {
  Orientation o(num_edges);
  for (std::size_t j = 0; j < num_edges; ++j) {
    if ((index >> (num_edges - 1 - j)) & 1) {
      o.set(static_cast<EdgeId>(j), Direction::kBackward);
    }
  }
  return o;
}

bool OrientationEnumerator::next(Orientation& out) {
  if (current_ >= last_) return false;
  out = at(num_edges_, current_++);
  return true;
}

std::optional<ExactDistribution> stationary_linear_solve(
    const OrientedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxLinearSolveVertices) {
    throw CapExceeded("linear solve refuses n = " + std::to_string(n) +
                      " > " + std::to_string(kMaxLinearSolveVertices));
  }
  if (n == 0) return std::nullopt;
  const Counts c = count(g);
  for (Vertex v = 0; v < n; ++v) {
    if (c.out[v] == 0) throw WalkUndefined(v);
  }
  // Rows 0..n-1: sum_u pi_u T(u,v) - pi_v = 0. Row n: sum pi = 1.
  // Column n holds the right-hand side.
  std::vector<std::vector<Rational>> a(n + 1,
                                       std::vector<Rational>(n + 1, 0));
  for (Vertex v = 0; v < n; ++v) a[v][v] = -1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc arc = g.arc(e);
    a[arc.head][arc.tail] += Rational(1, c.out[arc.tail]);
  }
  for (std::size_t j = 0; j <= n; ++j) a[n][j] = 1;

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = row;
    while (pivot <= n && a[pivot][col] == 0) ++pivot;
    if (pivot > n) return std::nullopt;
    std::swap(a[pivot], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j <= n; ++j) a[r][j] -= factor * a[row][j];
    }
    ++row;
  }
  // The leftover equation must read 0 = 0.
  if (a[n][n] != 0) return std::nullopt;
  ExactDistribution pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n];
  return pi;
}

}  // namespace unistat

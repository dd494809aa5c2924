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

#include "unistat/markov.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unistat/errors.h"

namespace unistat {

ExactDistribution uniform_exact(std::size_t n) {
  return ExactDistribution(n, Rational(1, static_cast<unsigned long>(n)));
}

Distribution uniform(std::size_t n) {
  return Distribution(n, 1.0 / static_cast<double>(n));
}

namespace {

template <typename Dist>
Dist step_impl(const OrientedGraph& g, const Dist& d) {
  if (d.size() != g.num_vertices()) {
    throw std::invalid_argument("distribution length differs from n");
  }
  const DegreeProfile deg = degrees(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (deg[v].out == 0 && d[v] > 0) throw WalkUndefined(v);
  }
  Dist out(g.num_vertices(), typename Dist::value_type(0));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    if (d[a.tail] == 0) continue;
    out[a.head] += d[a.tail] / deg[a.tail].out;
  }
  return out;
}

template <typename Dist>
Dist lazy_impl(const OrientedGraph& g, const Dist& d) {
  Dist moved = step_impl(g, d);
  for (std::size_t v = 0; v < moved.size(); ++v) {
    moved[v] = (moved[v] + d[v]) / 2;
  }
  return moved;
}

}  // namespace

ExactDistribution transition_step(const OrientedGraph& g,
                                  const ExactDistribution& d) {
  return step_impl(g, d);
}

Distribution transition_step(const OrientedGraph& g, const Distribution& d) {
  return step_impl(g, d);
}

ExactDistribution lazy_step(const OrientedGraph& g,
                            const ExactDistribution& d) {
  return lazy_impl(g, d);
}

Distribution lazy_step(const OrientedGraph& g, const Distribution& d) {
  return lazy_impl(g, d);
}

std::size_t default_max_iters(const OrientedGraph& g, double tol) {
  std::size_t max_degree = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    max_degree = std::max(max_degree, g.underlying().degree(v));
  }
  const double log_term = std::ceil(std::log(1.0 / tol));
  return 10 * std::max<std::size_t>(g.num_vertices(), 1) * max_degree *
         static_cast<std::size_t>(std::max(log_term, 1.0));
}

StationaryResult stationary_distribution(const OrientedGraph& g,
                                         const WalkParams& params) {
  if (!(params.tol > 0)) throw std::invalid_argument("tol must be positive");
  const std::size_t cap = params.max_iters > 0
                              ? params.max_iters
                              : default_max_iters(g, params.tol);
  StationaryResult result;
  result.verified = true;
  for (const Component& c : connected_components(g.underlying())) {
    if (!strongly_connected(g, c.vertices)) {
      result.verified = false;
      break;
    }
  }
  Distribution current = uniform(g.num_vertices());
  for (std::size_t it = 1; it <= cap; ++it) {
    Distribution next = params.lazy ? lazy_step(g, current)
                                    : transition_step(g, current);
    double change = 0.0;
    for (std::size_t v = 0; v < next.size(); ++v) {
      change = std::max(change, std::abs(next[v] - current[v]));
    }
    current = std::move(next);
    result.iterations = it;
    result.residual = change;
    if (change < params.tol) {
      result.converged = true;
      break;
    }
  }
  result.distribution = std::move(current);
  return result;
}

Rational in_probability(const OrientedGraph& g, const DegreeProfile& deg,
                        Vertex v) {
  Rational sum(0);
  for (EdgeId e : g.underlying().incident(v)) {
    const Arc a = g.arc(e);
    if (a.head == v) sum += Rational(1, deg[a.tail].out);
  }
  return sum;
}

bool is_uniform_stationary_exact(const OrientedGraph& g) {
  const DegreeProfile deg = degrees(g);
  for (const VertexDegrees& d : deg) {
    if (d.out == 0) return false;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_probability(g, deg, v) != 1) return false;
  }
  return true;
}

}  // namespace unistat

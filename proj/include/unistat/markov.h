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

#ifndef UNISTAT_MARKOV_H_
#define UNISTAT_MARKOV_H_

// Random walk on an oriented graph. From u the walk takes each out-arc with
// probability 1/d+(u), so T(u,v) = mult(u,v) / d+(u).

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "unistat/graph.h"

namespace unistat {

using Rational = mpq_class;

// Exact variant sums to exactly 1; numeric variant to within 1e-12.
using ExactDistribution = std::vector<Rational>;
using Distribution = std::vector<double>;

ExactDistribution uniform_exact(std::size_t n);
Distribution uniform(std::size_t n);

// One step of the plain walk. Throws WalkUndefined if positive mass sits on
// a vertex with out-degree 0.
ExactDistribution transition_step(const OrientedGraph& g,
                                  const ExactDistribution& d);
Distribution transition_step(const OrientedGraph& g, const Distribution& d);

// (d + transition_step(d)) / 2.
ExactDistribution lazy_step(const OrientedGraph& g, const ExactDistribution& d);
Distribution lazy_step(const OrientedGraph& g, const Distribution& d);

struct WalkParams {
  bool lazy = true;
  double tol = 1e-12;  // L-infinity change between iterates
  // 0 selects 10 * n * Delta * ceil(log(1/tol)), Delta the maximum degree.
  std::size_t max_iters = 0;
};

struct StationaryResult {
  Distribution distribution;
  std::size_t iterations = 0;
  double residual = 0.0;  // L-infinity change in the last iteration
  bool converged = false;
  // Every component is strongly connected, so the limit is the unique
  // stationary distribution of each component.
  bool verified = false;
};

// Power iteration from the uniform distribution. Throws std::invalid_argument
// on tol <= 0, WalkUndefined if mass reaches a sink.
StationaryResult stationary_distribution(const OrientedGraph& g,
                                         const WalkParams& params = {});

std::size_t default_max_iters(const OrientedGraph& g, double tol);

// Uniform distribution is stationary: d+(v) >= 1 everywhere and
// sum over arcs u->v of 1/d+(u) is exactly 1 at every v.
bool is_uniform_stationary_exact(const OrientedGraph& g);

// sum over arcs u->v of 1/d+(u): the mass v receives in one step from the
// uniform distribution, scaled by n.
Rational in_probability(const OrientedGraph& g, const DegreeProfile& deg,
                        Vertex v);

}  // namespace unistat

#endif  // UNISTAT_MARKOV_H_

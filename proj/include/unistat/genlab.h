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

#ifndef UNISTAT_GENLAB_H_
#define UNISTAT_GENLAB_H_

// Instance generation: graph families, orientation modes and planted
// far-from-Eulerian instances. Same spec and seed give identical output.

#include <cstdint>
#include <variant>

#include "unistat/graph.h"

namespace unistat {

struct Cycle {
  std::uint32_t n;
};
struct CompleteBipartite {
  std::uint32_t a;
  std::uint32_t b;
};
// Configuration model; self-loops rejected by resampling, parallel edges kept.
struct DeltaRegularRandom {
  std::uint32_t n;
  std::uint32_t delta;
};
struct Hypercube {
  std::uint32_t dimension;
};
struct Petersen {};
struct CompleteGraph {
  std::uint32_t n;
};

using Family = std::variant<Cycle, CompleteBipartite, DeltaRegularRandom,
                            Hypercube, Petersen, CompleteGraph>;

struct RandomOrientation {};
// Along an Eulerian circuit of each component; needs all degrees even.
struct EulerianOrientation {};
// Bipartite families only: left vertices get (d-, d+) = (k1, k2), right
// vertices (k2, k1). Needs k1, k2 >= 1 and k1 + k2 = Delta.
struct PropertyPOrientation {
  std::uint32_t k1;
  std::uint32_t k2;
};
// Bipartite families only: every edge from the left class to the right.
struct AllOneWay {};

using OrientationMode = std::variant<RandomOrientation, EulerianOrientation,
                                     PropertyPOrientation, AllOneWay>;

struct GenSpec {
  Family family;
  OrientationMode mode;
  std::uint64_t seed = 0;
};

// Throws GenerationError for infeasible family/mode combinations.
UndirectedMultigraph make_family(const Family& family, std::uint64_t seed);
OrientedGraph generate(const GenSpec& spec);

struct PlantedInstance {
  OrientedGraph graph;
  std::uint32_t flips = 0;
  // sum_v |d+(v) - d-(v)| / 4, a lower bound on flips-to-Eulerian.
  double certificate = 0.0;
};

// Flips ceil(eps * m) random edges of an Eulerian graph, resampling until
// the imbalance bound certifies distance >= eps * m. Throws GenerationError
// after 1000 failed attempts, naming the best bound reached, and
// std::invalid_argument if g is not Eulerian or eps is outside [0, 1].
PlantedInstance plant_far(const OrientedGraph& g, double eps,
                          std::uint64_t seed);

double imbalance_bound(const OrientedGraph& g);

}  // namespace unistat

#endif  // UNISTAT_GENLAB_H_

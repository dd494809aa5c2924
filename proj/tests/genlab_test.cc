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

#include "unistat/genlab.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.h"
#include "unistat/bruteforce.h"
#include "unistat/errors.h"
#include "unistat/structure.h"

namespace unistat {
namespace {

TEST(Generate, CycleEulerianIsDirectedTriangle) {
  OrientedGraph g = generate({Cycle{3}, EulerianOrientation{}, 0});
  EXPECT_TRUE(is_eulerian(g));
  EXPECT_TRUE(has_property_p(g).holds());
}

TEST(Generate, K33PropertyP) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OrientedGraph g = generate({CompleteBipartite{3, 3}, PropertyPOrientation{1, 2}, seed});
    auto d = testing::recount(g);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(d[v], std::make_pair(1u, 2u));
    for (Vertex v = 3; v < 6; ++v) EXPECT_EQ(d[v], std::make_pair(2u, 1u));
    EXPECT_TRUE(has_property_p(g).holds());
  }
}

TEST(Generate, RegularEulerian) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OrientedGraph g = generate({DeltaRegularRandom{64, 4}, EulerianOrientation{}, seed});
    EXPECT_EQ(g.num_edges(), 128u);
    EXPECT_EQ(degree_delta(g), 4u);
    EXPECT_TRUE(is_eulerian(g));
    for (const Edge& e : g.underlying().edges()) EXPECT_NE(e.a, e.b);
  }
}

TEST(Generate, Families) {
  EXPECT_EQ(generate({Hypercube{3}, RandomOrientation{}, 0}).num_edges(), 12u);
  OrientedGraph p = generate({Petersen{}, RandomOrientation{}, 0});
  EXPECT_EQ(p.num_edges(), 15u);
  EXPECT_EQ(degree_delta(p), 3u);
  EXPECT_EQ(generate({CompleteGraph{4}, RandomOrientation{}, 0}).num_edges(), 6u);
  OrientedGraph one = generate({CompleteBipartite{2, 3}, AllOneWay{}, 0});
  for (EdgeId e = 0; e < one.num_edges(); ++e) EXPECT_LT(one.arc(e).tail, 2u);
}

TEST(Generate, Refusals) {
  EXPECT_THROW(generate({DeltaRegularRandom{5, 3}, RandomOrientation{}, 0}), GenerationError);
  EXPECT_THROW(generate({Petersen{}, EulerianOrientation{}, 0}), GenerationError);
  EXPECT_THROW(generate({Cycle{5}, AllOneWay{}, 0}), GenerationError);
  EXPECT_THROW(generate({CompleteBipartite{3, 3}, PropertyPOrientation{0, 3}, 0}), GenerationError);
  EXPECT_THROW(generate({CompleteBipartite{3, 3}, PropertyPOrientation{1, 1}, 0}), GenerationError);
  EXPECT_THROW(generate({Petersen{}, PropertyPOrientation{1, 2}, 0}), GenerationError);
}

TEST(Generate, SameSeedSameBytes) {
  GenSpec spec{DeltaRegularRandom{40, 4}, RandomOrientation{}, 99};
  EXPECT_EQ(serialize(generate(spec)), serialize(generate(spec)));
  GenSpec other = spec;
  other.seed = 100;
  EXPECT_NE(serialize(generate(spec)), serialize(generate(other)));
}

TEST(Generate, PropertyPModeSatisfiesP) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t k1 = 1 + t % 3;
    OrientedGraph g = generate({CompleteBipartite{4, 4}, PropertyPOrientation{k1, 4 - k1}, rng()});
    EXPECT_TRUE(has_property_p(g).holds());
  }
}

TEST(PlantFar, C8) {
  OrientedGraph c8 = testing::directed_cycle(8);
  PlantedInstance p = plant_far(c8, 0.125, 1);
  EXPECT_EQ(p.flips, 1u);
  EXPECT_EQ(p.certificate, 1.0);
  EXPECT_EQ(distance_to(p.graph, Target::kEulerian).min_flips, 1u);
}

TEST(PlantFar, Regular64) {
  OrientedGraph g = generate({DeltaRegularRandom{64, 4}, EulerianOrientation{}, 2});
  PlantedInstance p = plant_far(g, 0.125, 3);
  EXPECT_EQ(p.flips, 16u);
  EXPECT_GE(p.certificate, 16.0);
}

TEST(PlantFar, ZeroIsIdentity) {
  OrientedGraph c8 = testing::directed_cycle(8);
  PlantedInstance p = plant_far(c8, 0.0, 1);
  EXPECT_EQ(p.graph, c8);
  EXPECT_EQ(p.certificate, 0.0);
}

TEST(PlantFar, CertificateIsLowerBound) {
  std::mt19937_64 rng(10);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    OrientedGraph g = generate({DeltaRegularRandom{8, 4}, EulerianOrientation{}, rng()});
    try {
      PlantedInstance p = plant_far(g, 0.125, rng());
      DistanceResult d = distance_to(p.graph, Target::kEulerian);
      ASSERT_TRUE(d.reachable());
      EXPECT_GE(*d.min_flips, static_cast<std::uint32_t>(std::ceil(0.125 * 16)));
      EXPECT_GE(*d.min_flips, p.certificate);
      ++checked;
    } catch (const GenerationError&) {
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(PlantFar, Errors) {
  OrientedGraph k22 = testing::all_one_way_kbip(2, 2);
  EXPECT_THROW(plant_far(k22, 0.1, 0), std::invalid_argument);
  EXPECT_THROW(plant_far(testing::directed_cycle(4), 1.5, 0), std::invalid_argument);
  // Flipping every edge of a directed cycle keeps it balanced.
  EXPECT_THROW(plant_far(testing::directed_cycle(4), 1.0, 0), GenerationError);
}

}  // namespace
}  // namespace unistat

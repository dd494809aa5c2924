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

#include "unistat/structure.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "unistat/genlab.h"
#include "unistat/markov.h"

namespace unistat {
namespace {

using testing::directed;
using testing::directed_cycle;

// Independent reading of property P from a recount.
bool p_oracle(const OrientedGraph& g) {
  auto d = testing::recount(g);
  for (auto [in, out] : d) {
    if (in == 0 || out == 0) return false;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (d[g.arc(e).tail].second != d[g.arc(e).head].first) return false;
  }
  return true;
}

TEST(HasPropertyP, Examples) {
  EXPECT_TRUE(has_property_p(directed_cycle(3)).holds());
  PropertyResult r = has_property_p(directed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(r.status, PropertyStatus::kViolated);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, Witness(VertexWitness{0}));
  EXPECT_TRUE(has_property_p(testing::k33_property_p()).holds());
}

TEST(HasPropertyP, NotDegreeDelta) {
  EXPECT_EQ(has_property_p(directed(3, {{0, 1}, {1, 2}})).status,
            PropertyStatus::kNotDegreeDelta);
}

TEST(HasPropertyP, EdgeWitness) {
  // K4 with vertex 0 out 2 in 1; arcs chosen so all vertices have d-, d+ >= 1
  // but some arc breaks d+(u) == d-(v).
  OrientedGraph g = directed(4, {{0, 1}, {0, 2}, {3, 0}, {1, 2}, {1, 3}, {2, 3}});
  PropertyResult r = has_property_p(g);
  ASSERT_EQ(r.status, PropertyStatus::kViolated);
  ASSERT_TRUE(r.witness);
  const auto* w = std::get_if<EdgeWitness>(&*r.witness);
  ASSERT_NE(w, nullptr);
  DegreeProfile d = degrees(g);
  EXPECT_NE(d[w->tail].out, d[w->head].in);
  EXPECT_EQ(g.arc(w->edge).tail, w->tail);
}

TEST(HasPropertyP, MatchesOracleAndWitnessesAreReal) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    OrientedGraph g = generate({DeltaRegularRandom{8, 2u + t % 3}, RandomOrientation{}, rng()});
    PropertyResult r = has_property_p(g);
    EXPECT_EQ(r.holds(), p_oracle(g));
    EXPECT_EQ(r.holds(), is_uniform_stationary_exact(g));
    if (!r.holds()) {
      ASSERT_TRUE(r.witness);
      DegreeProfile d = degrees(g);
      if (const auto* v = std::get_if<VertexWitness>(&*r.witness)) {
        EXPECT_TRUE(d[v->vertex].in == 0 || d[v->vertex].out == 0);
      } else {
        const auto& e = std::get<EdgeWitness>(*r.witness);
        EXPECT_NE(d[e.tail].out, d[e.head].in);
      }
    }
  }
}

TEST(Classify, Examples) {
  OrientedGraph c3 = directed_cycle(3);
  auto comps = connected_components(c3.underlying());
  StructureReport r = classify(c3, comps[0]);
  EXPECT_TRUE(r.property_p);
  EXPECT_TRUE(r.uniform_stationary);
  EXPECT_EQ(r.classification, Classification(NonBipartiteEulerian{}));

  OrientedGraph c4 = directed_cycle(4);
  EXPECT_EQ(classify(c4, connected_components(c4.underlying())[0]).classification,
            Classification(BipartiteBalanced{1, 1, 2, 2}));

  OrientedGraph k33 = testing::k33_property_p();
  EXPECT_EQ(classify(k33, connected_components(k33.underlying())[0]).classification,
            Classification(BipartiteBalanced{1, 2, 3, 3}));
}

TEST(Classify, ViolationMapsWitnessToParentIds) {
  // Isolated vertex 0, then a reversed-edge C4 on 1..4.
  OrientedGraph g = directed(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto comps = connected_components(g.underlying());
  ASSERT_EQ(comps.size(), 2u);
  StructureReport r = classify(g, comps[1]);
  EXPECT_FALSE(r.property_p);
  const auto* v = std::get_if<Violation>(&r.classification);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->witness, Witness(VertexWitness{1}));
}

TEST(DegreeAlternating, CycleIsConstant) {
  OrientedGraph c3 = directed_cycle(3);
  for (Vertex s = 0; s < 3; ++s) {
    AlternatingSequence a = degree_alternating_sequence(c3, s, 24);
    EXPECT_FALSE(a.truncated);
    EXPECT_EQ(a.s.size(), 24u);
    for (auto x : a.s) EXPECT_EQ(x, 1u);
    EXPECT_EQ(a.vertices[1], (s + 2) % 3);
  }
}

TEST(DegreeAlternating, PropertyPIsConstant) {
  OrientedGraph k33 = testing::k33_property_p();
  for (Vertex s = 0; s < 6; ++s) {
    AlternatingSequence a = degree_alternating_sequence(k33, s, 72);
    for (std::size_t i = 1; i < a.s.size(); ++i) EXPECT_EQ(a.s[i], a.s[0]);
  }
}

TEST(DegreeAlternating, StrictDropAtReversedEdge) {
  OrientedGraph g = directed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  AlternatingSequence a = degree_alternating_sequence(g, 2, 16);
  EXPECT_EQ(a.vertices, (std::vector<Vertex>{2, 1, 0}));
  EXPECT_TRUE(a.truncated);
  ASSERT_EQ(a.s.size(), 3u);
  EXPECT_EQ(a.s[0], 1u);
  EXPECT_EQ(a.s[1], 1u);
  EXPECT_LT(a.s[2], a.s[1]);
}

TEST(DegreeAlternating, TieBreakSmallestId) {
  // 0 has in-neighbours 1 and 2, both out-degree 1.
  OrientedGraph g = directed(3, {{1, 0}, {2, 0}, {0, 1}, {0, 2}});
  AlternatingSequence a = degree_alternating_sequence(g, 0, 2);
  EXPECT_EQ(a.vertices[1], 1u);
}

TEST(CutBalance, Examples) {
  std::vector<Vertex> s0{0};
  CutBalance c = cut_balance(directed_cycle(3), s0);
  EXPECT_EQ(c.forward, 1);
  EXPECT_EQ(c.backward, 1);
  std::vector<Vertex> left{0, 1};
  CutBalance k = cut_balance(testing::all_one_way_kbip(2, 2), left);
  EXPECT_EQ(k.forward, 2);
  EXPECT_EQ(k.backward, 0);
}

TEST(CutBalance, PropertyPBalancesEverySubset) {
  OrientedGraph k33 = testing::k33_property_p();
  for (std::uint32_t mask = 1; mask + 1 < (1u << 6); ++mask) {
    std::vector<Vertex> sub;
    for (Vertex v = 0; v < 6; ++v) {
      if (mask >> v & 1) sub.push_back(v);
    }
    CutBalance c = cut_balance(k33, sub);
    EXPECT_EQ(c.forward, c.backward);
  }
}

}  // namespace
}  // namespace unistat

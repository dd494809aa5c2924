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

#include "unistat/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "unistat/errors.h"

namespace unistat {
namespace {

using testing::directed;
using testing::directed_cycle;
using testing::recount;

TEST(ParseGraph, DirectedTriangle) {
  OrientedGraph g = parse_graph("3 3\n0 1\n1 2\n2 0");
  EXPECT_EQ(g, directed_cycle(3));
  EXPECT_EQ(g.arc(2).tail, 2u);
  EXPECT_EQ(g.arc(2).head, 0u);
}

TEST(ParseGraph, SelfLoopNamesLine) {
  try {
    parse_graph("2 1\n0 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraph, ReversedC4Edge) {
  OrientedGraph g = parse_graph("4 4\n0 1\n1 2\n2 3\n0 3");
  EXPECT_EQ(g.arc(3).tail, 0u);
  EXPECT_EQ(g.arc(3).head, 3u);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  OrientedGraph g = parse_graph("# c\n\n3 3\n0 1 # tag\n# mid\n1 2\n2 0\n");
  EXPECT_EQ(g, directed_cycle(3));
}

TEST(ParseGraph, Errors) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("x y\n"), 1u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 3\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 3u);
  EXPECT_NE(line_of("3 1\n0 1\n1 2\n"), 0u);
  EXPECT_EQ(line_of("3 1\n0 1 2\n"), 2u);
  EXPECT_NE(line_of(""), 0u);
}

TEST(ParseGraph, SerializeRoundTrip) {
  const std::string canonical = "4 5\n0 1\n2 1\n2 3\n3 0\n0 1\n";
  EXPECT_EQ(serialize(parse_graph(canonical)), canonical);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Vertex n = 2 + rng() % 6;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 0; i < 8; ++i) {
      Vertex a = rng() % n;
      Vertex b = rng() % n;
      if (a != b) arcs.push_back({a, b});
    }
    OrientedGraph g = directed(n, arcs);
    Orientation o = g.orientation();
    for (EdgeId e = 0; e < o.size(); ++e) {
      if (rng() & 1) o.flip(e);
    }
    g = g.with_orientation(o);
    EXPECT_EQ(parse_graph(serialize(g)), g);
  }
}

TEST(Degrees, Examples) {
  for (const VertexDegrees& d : degrees(directed_cycle(3))) {
    EXPECT_EQ(d, (VertexDegrees{1, 1}));
  }
  DegreeProfile k22 = degrees(testing::all_one_way_kbip(2, 2));
  EXPECT_EQ(k22[0], (VertexDegrees{0, 2}));
  EXPECT_EQ(k22[1], (VertexDegrees{0, 2}));
  EXPECT_EQ(k22[2], (VertexDegrees{2, 0}));
  EXPECT_EQ(k22[3], (VertexDegrees{2, 0}));
  DegreeProfile c4 = degrees(directed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(c4[0], (VertexDegrees{0, 2}));
  EXPECT_EQ(c4[1], (VertexDegrees{1, 1}));
  EXPECT_EQ(c4[2], (VertexDegrees{1, 1}));
  EXPECT_EQ(c4[3], (VertexDegrees{2, 0}));
}

TEST(Degrees, MatchesRecountAndSums) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Vertex n = 2 + rng() % 7;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int i = 0; i < 12; ++i) {
      Vertex a = rng() % n;
      Vertex b = rng() % n;
      if (a != b) arcs.push_back({a, b});
    }
    OrientedGraph g = directed(n, arcs);
    DegreeProfile d = degrees(g);
    auto r = recount(g);
    std::uint32_t sin = 0, sout = 0;
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(d[v].in, r[v].first);
      EXPECT_EQ(d[v].out, r[v].second);
      EXPECT_EQ(d[v].in + d[v].out, g.underlying().degree(v));
      sin += d[v].in;
      sout += d[v].out;
    }
    EXPECT_EQ(sin, g.num_edges());
    EXPECT_EQ(sout, g.num_edges());
    bool balanced = true;
    for (auto [in, out] : r) balanced = balanced && in == out;
    EXPECT_EQ(is_eulerian(g), balanced);
  }
}

TEST(DegreeDelta, Examples) {
  EXPECT_EQ(degree_delta(directed_cycle(3)), 2u);
  EXPECT_EQ(degree_delta(testing::all_one_way_kbip(3, 3)), 3u);
  EXPECT_EQ(degree_delta(directed(3, {{0, 1}, {1, 2}})), std::nullopt);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(directed_cycle(3).underlying()).size(), 1u);
  OrientedGraph two = directed(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto comps = connected_components(two.underlying());
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1].vertices, (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(comps[1].parent_edges, (std::vector<EdgeId>{3, 4, 5}));
  for (const Component& c : comps) {
    EXPECT_TRUE(strongly_connected(two, c.vertices));
  }
  OrientedGraph iso = directed(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto parts = connected_components(iso.underlying());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vertices.size(), 1u);
  EXPECT_EQ(parts[1].vertices.size(), 4u);
  OrientedGraph sub = restrict_to(iso, parts[1]);
  EXPECT_EQ(sub.num_vertices(), 4u);
  EXPECT_TRUE(is_eulerian(sub));
}

TEST(Bipartition, Examples) {
  const auto c4 = directed_cycle(4).underlying();
  std::vector<Vertex> all4{0, 1, 2, 3};
  auto p = bipartition(c4, all4);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->left, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p->right, (std::vector<Vertex>{1, 3}));
  std::vector<Vertex> all3{0, 1, 2};
  EXPECT_FALSE(bipartition(directed_cycle(3).underlying(), all3));
  const auto k33 = testing::all_one_way_kbip(3, 3).underlying();
  std::vector<Vertex> all6{0, 1, 2, 3, 4, 5};
  auto q = bipartition(k33, all6);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->left, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(q->right, (std::vector<Vertex>{3, 4, 5}));
}

TEST(Bipartition, EveryEdgeCrosses) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Vertex n = 2 + rng() % 7;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({Vertex(rng() % v), v});
    for (int i = 0; i < 3; ++i) {
      Vertex a = rng() % n, b = rng() % n;
      if (a != b) edges.push_back({a, b});
    }
    UndirectedMultigraph u(n, edges);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    auto p = bipartition(u, all);
    // Independent oracle: try all 2-colourings with vertex 0 on the left.
    bool exists = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !exists; mask += 2) {
      bool ok = true;
      for (const Edge& e : edges) ok = ok && (((mask >> e.a) ^ (mask >> e.b)) & 1);
      exists = ok;
    }
    EXPECT_EQ(p.has_value(), exists);
    if (p) {
      std::vector<int> side(n, -1);
      for (Vertex v : p->left) side[v] = 0;
      for (Vertex v : p->right) side[v] = 1;
      EXPECT_EQ(side[0], 0);
      for (const Edge& e : edges) EXPECT_NE(side[e.a], side[e.b]);
    }
  }
}

TEST(StronglyConnected, Examples) {
  std::vector<Vertex> all3{0, 1, 2};
  EXPECT_TRUE(strongly_connected(directed_cycle(3), all3));
  std::vector<Vertex> all4{0, 1, 2, 3};
  EXPECT_FALSE(strongly_connected(directed(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), all4));
}

TEST(IsEulerian, Examples) {
  EXPECT_TRUE(is_eulerian(directed_cycle(3)));
  EXPECT_FALSE(is_eulerian(testing::all_one_way_kbip(2, 2)));
  OrientedGraph g = directed(4, {{0, 1}, {0, 2}, {3, 1}, {2, 3}, {1, 2}});
  std::vector<std::pair<Vertex, Vertex>> both;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    both.push_back({g.arc(e).tail, g.arc(e).head});
    both.push_back({g.arc(e).head, g.arc(e).tail});
  }
  EXPECT_TRUE(is_eulerian(directed(4, both)));
  EXPECT_TRUE(is_eulerian(directed(5, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(UndirectedMultigraph, RejectsInvalid) {
  EXPECT_THROW(UndirectedMultigraph(2, {{0, 0}}), InvalidGraph);
  EXPECT_THROW(UndirectedMultigraph(2, {{0, 2}}), InvalidGraph);
  UndirectedMultigraph par(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(par.degree(0), 2u);
}

}  // namespace
}  // namespace unistat

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

#include "unistat/reduction.h"

#include <random>
#include <stdexcept>
#include <string>

#include "unistat/bruteforce.h"
#include "unistat/errors.h"
#include "unistat/max_flow.h"

namespace unistat {

SpecResult infer_bipartite_spec(EdgeOracle& oracle,
                                const UndirectedMultigraph& u,
                                std::span<const Vertex> component,
                                std::uint64_t seed) {
  std::optional<Bipartition> parts = bipartition(u, component);
  if (!parts) {
    throw std::invalid_argument("infer_bipartite_spec: component has an odd "
                                "cycle");
  }
  if (parts->left.size() != parts->right.size()) {
    return SideSizeMismatch{parts->left.size(), parts->right.size()};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, parts->left.size() - 1);
  const Vertex v = parts->left[pick(rng)];
  BipartiteSpec spec;
  spec.sampled = v;
  for (EdgeId e : u.incident(v)) {
    const Arc a = orient(u.edge(e), oracle.query(e));
    if (a.tail == v) {
      ++spec.k2;
    } else {
      ++spec.k1;
    }
  }
  spec.left = std::move(parts->left);
  spec.right = std::move(parts->right);
  return spec;
}

std::optional<Orientation> construct_gstar(const UndirectedMultigraph& u,
                                           const BipartiteSpec& spec) {
  if (spec.k1 == 0 || spec.k2 == 0) return std::nullopt;
  // Out-degree targets in G*: left k1, right k2.
  constexpr std::int64_t kUnconstrained = -1;
  std::vector<std::int64_t> target(u.num_vertices(), kUnconstrained);
  for (Vertex v : spec.left) target[v] = spec.k1;
  for (Vertex v : spec.right) target[v] = spec.k2;

  std::vector<EdgeId> edges;
  std::int64_t required = 0;
  for (EdgeId e = 0; e < u.num_edges(); ++e) {
    const Edge& ed = u.edge(e);
    const bool a_in = target[ed.a] != kUnconstrained;
    const bool b_in = target[ed.b] != kUnconstrained;
    if (a_in != b_in) {
      throw std::invalid_argument("construct_gstar: spec vertex set is not "
                                  "closed under adjacency");
    }
    if (a_in) edges.push_back(e);
  }
  for (std::int64_t t : target) {
    if (t == kUnconstrained) continue;
    required += t;
  }
  if (required != static_cast<std::int64_t>(edges.size())) return std::nullopt;

  // Source -> edge node (cap 1) -> either endpoint (cap 1) -> sink (cap =
  // out-degree target). A unit of flow through endpoint x makes x the tail.
  const auto num_edges = static_cast<MaxFlow::Node>(edges.size());
  const auto num_vertices = static_cast<MaxFlow::Node>(u.num_vertices());
  const MaxFlow::Node source = 0;
  const MaxFlow::Node sink = 1;
  auto edge_node = [](MaxFlow::Node i) { return 2 + i; };
  auto vertex_node = [&](Vertex v) {
    return 2 + num_edges + static_cast<MaxFlow::Node>(v);
  };
  MaxFlow flow(2 + num_edges + num_vertices);
  std::vector<MaxFlow::ArcIndex> to_a(edges.size());
  for (MaxFlow::Node i = 0; i < num_edges; ++i) {
    const Edge& ed = u.edge(edges[i]);
    flow.add_arc(source, edge_node(i), 1);
    to_a[i] = flow.add_arc(edge_node(i), vertex_node(ed.a), 1);
    flow.add_arc(edge_node(i), vertex_node(ed.b), 1);
  }
  for (Vertex v = 0; v < u.num_vertices(); ++v) {
    if (target[v] > 0) flow.add_arc(vertex_node(v), sink, target[v]);
  }
  if (flow.solve(source, sink) != num_edges) return std::nullopt;

  Orientation gstar(u.num_edges(), Direction::kForward);
  for (MaxFlow::Node i = 0; i < num_edges; ++i) {
    gstar.set(edges[i], flow.flow(to_a[i]) == 1 ? Direction::kForward
                                                : Direction::kBackward);
  }
  return gstar;
}

UndirectedMultigraph superimposed_underlying(const UndirectedMultigraph& u) {
  std::vector<Edge> doubled = u.edges();
  doubled.insert(doubled.end(), u.edges().begin(), u.edges().end());
  return UndirectedMultigraph(u.num_vertices(), std::move(doubled));
}

Superimposition superimpose(const UndirectedMultigraph& u, EdgeOracle& hidden,
                            const Orientation& gstar) {
  if (gstar.size() != u.num_edges()) {
    throw std::invalid_argument("superimpose: G* must orient every edge of u");
  }
  return Superimposition{
      std::make_shared<const UndirectedMultigraph>(superimposed_underlying(u)),
      SuperimposedOracle(hidden, gstar)};
}

OrientedGraph superimposed_graph(const OrientedGraph& hidden,
                                 const Orientation& gstar) {
  const std::size_t m = hidden.num_edges();
  if (gstar.size() != m) {
    throw std::invalid_argument("superimposed_graph: G* length differs from m");
  }
  Orientation both(2 * m);
  for (EdgeId e = 0; e < m; ++e) {
    both.set(e, hidden.orientation()[e]);
    both.set(static_cast<EdgeId>(m + e), gstar[e]);
  }
  return OrientedGraph(superimposed_underlying(hidden.underlying()),
                       std::move(both));
}

LemmaCheck check_distance_lemma(const UndirectedMultigraph& u,
                                const Orientation& hidden,
                                const Orientation& gstar) {
  if (2 * u.num_edges() > kMaxBruteForceEdges) {
    throw CapExceeded("distance lemma check refuses m = " +
                      std::to_string(u.num_edges()) + " > " +
                      std::to_string(kMaxBruteForceEdges / 2));
  }
  const OrientedGraph g(u, hidden);
  const DistanceResult to_p = distance_to(g, Target::kPropertyP);
  const DistanceResult to_euler =
      distance_to(superimposed_graph(g, gstar), Target::kEulerian);
  if (!to_p.reachable() || !to_euler.reachable()) {
    throw std::logic_error("distance lemma check: target unreachable although "
                           "G* exists");
  }
  LemmaCheck check;
  check.flips_property_p = *to_p.min_flips;
  check.flips_eulerian = *to_euler.min_flips;
  check.holds = check.flips_eulerian >= check.flips_property_p;
  return check;
}

}  // namespace unistat

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

#ifndef UNISTAT_REDUCTION_H_
#define UNISTAT_REDUCTION_H_

// Reduction from testing property P on a bipartite component to testing
// Eulerianity. Sample one left vertex v with (d-, d+) = (k1, k2), build a
// public orientation G* of the same undirected graph in which left vertices
// have (k2, k1) and right vertices (k1, k2), and superimpose it with the
// hidden orientation. The 2m-edge union is Eulerian iff G has P, and every
// probe of it costs at most one query to the hidden graph.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "unistat/graph.h"
#include "unistat/oracle.h"

namespace unistat {

struct BipartiteSpec {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::uint32_t k1 = 0;  // in-degree of the sampled left vertex
  std::uint32_t k2 = 0;  // out-degree of the sampled left vertex
  Vertex sampled = 0;
};

// |V_L| != |V_R|: the component cannot have P. Decided without queries.
struct SideSizeMismatch {
  std::size_t left_size;
  std::size_t right_size;
};

using SpecResult = std::variant<BipartiteSpec, SideSizeMismatch>;

// `component` must be a bipartite connected vertex set of u whose vertices
// all have degree Delta; throws std::invalid_argument otherwise. Charges the
// oracle for the sampled vertex's incident edges only.
SpecResult infer_bipartite_spec(EdgeOracle& oracle,
                                const UndirectedMultigraph& u,
                                std::span<const Vertex> component,
                                std::uint64_t seed);

// Orientation of u meeting the swapped degree targets on spec's vertices,
// found by max flow. nullopt when no such orientation exists, and also when
// k1 or k2 is 0 (P forbids vertices without in- or out-edges, and with a
// zero side the union would be Eulerian even though G lacks P). Edges
// outside the spec's vertex set keep the forward direction.
std::optional<Orientation> construct_gstar(const UndirectedMultigraph& u,
                                           const BipartiteSpec& spec);

enum class EdgeOrigin { kHidden, kPublic };

// Underlying graph of the superimposition: hidden edge i keeps id i and its
// public twin has id m + i with the same endpoints.
UndirectedMultigraph superimposed_underlying(const UndirectedMultigraph& u);

inline EdgeOrigin origin_of(EdgeId e, std::size_t hidden_edges) {
  return e < hidden_edges ? EdgeOrigin::kHidden : EdgeOrigin::kPublic;
}

struct Superimposition {
  std::shared_ptr<const UndirectedMultigraph> graph;
  SuperimposedOracle oracle;
};

// The returned oracle refers to `hidden`, which must outlive it.
Superimposition superimpose(const UndirectedMultigraph& u, EdgeOracle& hidden,
                            const Orientation& gstar);

// Fully materialized superimposition, for checks and the reduce command.
OrientedGraph superimposed_graph(const OrientedGraph& hidden,
                                 const Orientation& gstar);

struct LemmaCheck {
  std::uint32_t flips_property_p = 0;  // minimum flips of G to reach P
  std::uint32_t flips_eulerian = 0;    // minimum flips of the union
  bool holds = false;                  // flips_eulerian >= flips_property_p
};

// Exhaustive check of: G eps-far from P implies the union is eps/2-far from
// Eulerian. The union has 2m edges, so m <= 10 is required; throws
// CapExceeded otherwise.
LemmaCheck check_distance_lemma(const UndirectedMultigraph& u,
                                const Orientation& hidden,
                                const Orientation& gstar);

}  // namespace unistat

#endif  // UNISTAT_REDUCTION_H_

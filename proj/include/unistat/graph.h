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

#ifndef UNISTAT_GRAPH_H_
#define UNISTAT_GRAPH_H_

// Core graph values: the known undirected multigraph, a per-edge orientation,
// and the oriented graph they form together. All values are immutable after
// construction except Orientation, which is a plain bit vector.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unistat {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex a;
  Vertex b;
};

// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed,
// self-loops are not. Edge ids are positions in edges().
class UndirectedMultigraph {
 public:
  UndirectedMultigraph() = default;
  // Throws InvalidGraph on a self-loop or an endpoint >= n.
  UndirectedMultigraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return incident_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return incident_[v].size(); }
  Vertex other_end(EdgeId e, Vertex v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Forward means edge (a, b) is oriented a -> b.
enum class Direction : std::uint8_t { kForward = 0, kBackward = 1 };

class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t num_edges,
                       Direction fill = Direction::kForward)
      : dirs_(num_edges, fill) {}
  explicit Orientation(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {}

  std::size_t size() const { return dirs_.size(); }
  Direction operator[](EdgeId e) const { return dirs_[e]; }
  void set(EdgeId e, Direction d) { dirs_[e] = d; }
  void flip(EdgeId e) {
    dirs_[e] = dirs_[e] == Direction::kForward ? Direction::kBackward
                                               : Direction::kForward;
  }
  bool operator==(const Orientation&) const = default;

 private:
  std::vector<Direction> dirs_;
};

struct Arc {
  Vertex tail;
  Vertex head;
};

inline Arc orient(const Edge& e, Direction d) {
  return d == Direction::kForward ? Arc{e.a, e.b} : Arc{e.b, e.a};
}

class OrientedGraph {
 public:
  // Throws InvalidGraph if the orientation length differs from m.
  OrientedGraph(std::shared_ptr<const UndirectedMultigraph> underlying,
                Orientation orientation);
  OrientedGraph(UndirectedMultigraph underlying, Orientation orientation);

  const UndirectedMultigraph& underlying() const { return *underlying_; }
  const std::shared_ptr<const UndirectedMultigraph>& shared_underlying()
      const {
    return underlying_;
  }
  const Orientation& orientation() const { return orientation_; }
  std::size_t num_vertices() const { return underlying_->num_vertices(); }
  std::size_t num_edges() const { return underlying_->num_edges(); }
  Arc arc(EdgeId e) const {
    return orient(underlying_->edge(e), orientation_[e]);
  }
  // Same underlying graph, different orientation.
  OrientedGraph with_orientation(Orientation orientation) const {
    return OrientedGraph(underlying_, std::move(orientation));
  }

 private:
  std::shared_ptr<const UndirectedMultigraph> underlying_;
  Orientation orientation_;
};

// Equal when both have the same vertex count and the same arc for every
// edge id, regardless of how each edge's endpoints are stored.
bool operator==(const OrientedGraph& x, const OrientedGraph& y);

struct VertexDegrees {
  std::uint32_t in = 0;
  std::uint32_t out = 0;
  bool operator==(const VertexDegrees&) const = default;
};

using DegreeProfile = std::vector<VertexDegrees>;

DegreeProfile degrees(const OrientedGraph& g);

// The common undirected degree, if every vertex has the same one.
std::optional<std::uint32_t> degree_delta(const UndirectedMultigraph& u);
std::optional<std::uint32_t> degree_delta(const OrientedGraph& g);

// A connected component together with its induced subgraph. Local vertex i
// is parent vertex vertices[i]; local edge j is parent edge parent_edges[j].
struct Component {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> parent_edges;
  UndirectedMultigraph graph;
};

// Component index of every vertex, numbered by smallest member.
std::vector<std::uint32_t> component_labels(const UndirectedMultigraph& u);
std::vector<Component> connected_components(const UndirectedMultigraph& u);

// Restriction of an orientation to a component's local edge ids.
OrientedGraph restrict_to(const OrientedGraph& g, const Component& c);

struct Bipartition {
  std::vector<Vertex> left;  // contains the smallest vertex of the component
  std::vector<Vertex> right;
};

// Two-colouring of a connected vertex set, or nullopt on an odd cycle.
std::optional<Bipartition> bipartition(const UndirectedMultigraph& u,
                                       std::span<const Vertex> component);

// True iff every ordered pair of `component` is joined by a directed path.
bool strongly_connected(const OrientedGraph& g,
                        std::span<const Vertex> component);

// d+(v) == d-(v) at every vertex.
bool is_eulerian(const OrientedGraph& g);

// Text format: '#' comments, header "n m", then m lines "u v" for u -> v.
// Anything after '#' on a line is ignored. Throws ParseError.
OrientedGraph parse_graph(std::string_view text);
std::string serialize(const OrientedGraph& g);

}  // namespace unistat

#endif  // UNISTAT_GRAPH_H_

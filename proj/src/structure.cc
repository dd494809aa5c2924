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

#include <algorithm>
#include <stdexcept>

namespace unistat {

PropertyResult check_property_p_edgewise(const OrientedGraph& g,
                                         const DegreeProfile& deg) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (deg[v].in == 0 || deg[v].out == 0) {
      return {PropertyStatus::kViolated, VertexWitness{v}};
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    if (deg[a.tail].out != deg[a.head].in) {
      return {PropertyStatus::kViolated, EdgeWitness{e, a.tail, a.head}};
    }
  }
  return {PropertyStatus::kHolds, std::nullopt};
}

PropertyResult has_property_p(const OrientedGraph& g) {
  if (!degree_delta(g)) return {PropertyStatus::kNotDegreeDelta, std::nullopt};
  return check_property_p_edgewise(g, degrees(g));
}

namespace {

Witness to_parent(const Witness& w, const Component& c) {
  if (const auto* vw = std::get_if<VertexWitness>(&w)) {
    return VertexWitness{c.vertices[vw->vertex]};
  }
  const auto& ew = std::get<EdgeWitness>(w);
  return EdgeWitness{c.parent_edges[ew.edge], c.vertices[ew.tail],
                     c.vertices[ew.head]};
}

}  // namespace

StructureReport classify(const OrientedGraph& g, const Component& component) {
  const OrientedGraph local = restrict_to(g, component);
  const PropertyResult p = has_property_p(local);
  if (p.status == PropertyStatus::kNotDegreeDelta) {
    throw std::invalid_argument("classify: component is not degree-Delta");
  }
  StructureReport report;
  report.property_p = p.holds();
  report.uniform_stationary = is_uniform_stationary_exact(local);
  if (!p.holds()) {
    report.witness = to_parent(*p.witness, component);
    report.classification = Violation{*report.witness};
    return report;
  }
  std::vector<Vertex> all(local.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  const std::optional<Bipartition> parts =
      bipartition(local.underlying(), all);
  if (!parts) {
    if (!is_eulerian(local)) {
      throw std::logic_error("P holds on a non-bipartite component that is "
                             "not Eulerian");
    }
    report.classification = NonBipartiteEulerian{};
    return report;
  }
  const DegreeProfile deg = degrees(local);
  const VertexDegrees left = deg[parts->left.front()];
  for (Vertex v : parts->left) {
    if (deg[v] != left) {
      throw std::logic_error("P holds but left side degrees differ");
    }
  }
  for (Vertex v : parts->right) {
    if (deg[v] != VertexDegrees{left.out, left.in}) {
      throw std::logic_error("P holds but right side degrees are not swapped");
    }
  }
  report.classification = BipartiteBalanced{
      left.in, left.out, parts->left.size(), parts->right.size()};
  return report;
}

AlternatingSequence degree_alternating_sequence(const OrientedGraph& g,
                                                Vertex start,
                                                std::size_t length) {
  const DegreeProfile deg = degrees(g);
  AlternatingSequence seq;
  if (length == 0) return seq;
  Vertex current = start;
  seq.vertices.push_back(current);
  seq.s.push_back(deg[current].in);
  while (seq.vertices.size() < length) {
    const std::size_t next_index = seq.vertices.size();
    const bool take_min = next_index % 2 == 1;
    std::optional<Vertex> best;
    for (EdgeId e : g.underlying().incident(current)) {
      const Arc a = g.arc(e);
      if (a.head != current) continue;
      const Vertex w = a.tail;
      if (!best) {
        best = w;
        continue;
      }
      const std::uint32_t dw = deg[w].out;
      const std::uint32_t db = deg[*best].out;
      const bool better = take_min ? (dw < db || (dw == db && w < *best))
                                   : (dw > db || (dw == db && w < *best));
      if (better) best = w;
    }
    if (!best) {
      seq.truncated = true;
      break;
    }
    current = *best;
    seq.vertices.push_back(current);
    seq.s.push_back(take_min ? deg[current].out : deg[current].in);
  }
  return seq;
}

CutBalance cut_balance(const OrientedGraph& g,
                       std::span<const Vertex> subset) {
  std::vector<bool> inside(g.num_vertices(), false);
  for (Vertex v : subset) inside[v] = true;
  const DegreeProfile deg = degrees(g);
  CutBalance cut{Rational(0), Rational(0)};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    if (inside[a.tail] == inside[a.head]) continue;
    const Rational p(1, deg[a.tail].out);
    if (inside[a.tail]) {
      cut.forward += p;
    } else {
      cut.backward += p;
    }
  }
  return cut;
}

}  // namespace unistat

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

#ifndef UNISTAT_STRUCTURE_H_
#define UNISTAT_STRUCTURE_H_

// Local characterization of uniform stationarity on degree-Delta oriented
// graphs. Property P: every vertex has d- >= 1 and d+ >= 1, and every arc
// u -> v has d+(u) == d-(v). On degree-Delta graphs P holds exactly when the
// uniform distribution is stationary for the random walk.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "unistat/graph.h"
#include "unistat/markov.h"

namespace unistat {

// A vertex with zero in- or out-degree.
struct VertexWitness {
  Vertex vertex;
  bool operator==(const VertexWitness&) const = default;
};

// An arc u -> v with d+(u) != d-(v).
struct EdgeWitness {
  EdgeId edge;
  Vertex tail;
  Vertex head;
  bool operator==(const EdgeWitness&) const = default;
};

using Witness = std::variant<VertexWitness, EdgeWitness>;

enum class PropertyStatus { kHolds, kViolated, kNotDegreeDelta };

struct PropertyResult {
  PropertyStatus status;
  std::optional<Witness> witness;  // set when kViolated
  bool holds() const { return status == PropertyStatus::kHolds; }
};

// Vertex witnesses take precedence; the smallest offending id is reported.
PropertyResult has_property_p(const OrientedGraph& g);

// Edgewise check with no degree-Delta precondition.
PropertyResult check_property_p_edgewise(const OrientedGraph& g,
                                         const DegreeProfile& deg);

struct NonBipartiteEulerian {
  bool operator==(const NonBipartiteEulerian&) const = default;
};

// Left side vertices have (d-, d+) = (k1, k2); right side (k2, k1).
struct BipartiteBalanced {
  std::uint32_t k1;
  std::uint32_t k2;
  std::size_t left_size;
  std::size_t right_size;
  bool operator==(const BipartiteBalanced&) const = default;
};

struct Violation {
  Witness witness;
  bool operator==(const Violation&) const = default;
};

using Classification =
    std::variant<NonBipartiteEulerian, BipartiteBalanced, Violation>;

struct StructureReport {
  bool property_p = false;
  bool uniform_stationary = false;
  Classification classification = NonBipartiteEulerian{};
  std::optional<Witness> witness;
};

// Classifies one connected component. Witness ids refer to g, not to the
// component. Throws std::invalid_argument if the component is not
// degree-Delta.
StructureReport classify(const OrientedGraph& g, const Component& component);

// Backward walk v0, v1, ... with arcs v_{i+1} -> v_i. Odd positions take the
// in-neighbour of minimum out-degree, even positions the in-neighbour of
// maximum out-degree; ties go to the smallest id. s_i is d-(v_i) for even i
// and d+(v_i) for odd i.
struct AlternatingSequence {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> s;
  // Stopped early at a vertex with no in-neighbour.
  bool truncated = false;
};

AlternatingSequence degree_alternating_sequence(const OrientedGraph& g,
                                                Vertex start,
                                                std::size_t length);

struct CutBalance {
  Rational forward;   // sum of 1/d+(u) over arcs subset -> complement
  Rational backward;  // sum of 1/d+(u) over arcs complement -> subset
};

CutBalance cut_balance(const OrientedGraph& g, std::span<const Vertex> subset);

}  // namespace unistat

#endif  // UNISTAT_STRUCTURE_H_

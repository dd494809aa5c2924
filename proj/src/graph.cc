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

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "unistat/errors.h"

namespace unistat {

UndirectedMultigraph::UndirectedMultigraph(std::size_t num_vertices,
                                           std::vector<Edge> edges)
    : edges_(std::move(edges)), incident_(num_vertices) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.a >= num_vertices || ed.b >= num_vertices) {
      throw InvalidGraph("edge " + std::to_string(e) +
                         " has an endpoint outside 0.." +
                         std::to_string(num_vertices) + "-1");
    }
    if (ed.a == ed.b) {
      throw InvalidGraph("edge " + std::to_string(e) + " is a self-loop at " +
                         std::to_string(ed.a));
    }
    incident_[ed.a].push_back(e);
    incident_[ed.b].push_back(e);
  }
}

OrientedGraph::OrientedGraph(
    std::shared_ptr<const UndirectedMultigraph> underlying,
    Orientation orientation)
    : underlying_(std::move(underlying)), orientation_(std::move(orientation)) {
  if (orientation_.size() != underlying_->num_edges()) {
    throw InvalidGraph("orientation has " +
                       std::to_string(orientation_.size()) +
                       " flags for " +
                       std::to_string(underlying_->num_edges()) + " edges");
  }
}

OrientedGraph::OrientedGraph(UndirectedMultigraph underlying,
                             Orientation orientation)
    : OrientedGraph(
          std::make_shared<const UndirectedMultigraph>(std::move(underlying)),
          std::move(orientation)) {}

DegreeProfile degrees(const OrientedGraph& g) {
  DegreeProfile profile(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    ++profile[a.tail].out;
    ++profile[a.head].in;
  }
  return profile;
}

std::optional<std::uint32_t> degree_delta(const UndirectedMultigraph& u) {
  if (u.num_vertices() == 0) return std::nullopt;
  const std::size_t delta = u.degree(0);
  for (Vertex v = 1; v < u.num_vertices(); ++v) {
    if (u.degree(v) != delta) return std::nullopt;
  }
  return static_cast<std::uint32_t>(delta);
}

std::optional<std::uint32_t> degree_delta(const OrientedGraph& g) {
  return degree_delta(g.underlying());
}

std::vector<std::uint32_t> component_labels(const UndirectedMultigraph& u) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(u.num_vertices(), kUnset);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < u.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : u.incident(v)) {
        const Vertex w = u.other_end(e, v);
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<Component> connected_components(const UndirectedMultigraph& u) {
  const std::vector<std::uint32_t> label = component_labels(u);
  const std::uint32_t count =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Component> comps(count);
  std::vector<Vertex> local(u.num_vertices());
  for (Vertex v = 0; v < u.num_vertices(); ++v) {
    local[v] = static_cast<Vertex>(comps[label[v]].vertices.size());
    comps[label[v]].vertices.push_back(v);
  }
  std::vector<std::vector<Edge>> local_edges(count);
  for (EdgeId e = 0; e < u.num_edges(); ++e) {
    const Edge& ed = u.edge(e);
    const std::uint32_t c = label[ed.a];
    comps[c].parent_edges.push_back(e);
    local_edges[c].push_back({local[ed.a], local[ed.b]});
  }
  for (std::uint32_t c = 0; c < count; ++c) {
    comps[c].graph = UndirectedMultigraph(comps[c].vertices.size(),
                                          std::move(local_edges[c]));
  }
  return comps;
}

OrientedGraph restrict_to(const OrientedGraph& g, const Component& c) {
  Orientation o(c.parent_edges.size());
  for (EdgeId j = 0; j < c.parent_edges.size(); ++j) {
    o.set(j, g.orientation()[c.parent_edges[j]]);
  }
  return OrientedGraph(c.graph, std::move(o));
}

std::optional<Bipartition> bipartition(const UndirectedMultigraph& u,
                                       std::span<const Vertex> component) {
  if (component.empty()) return Bipartition{};
  std::vector<std::int8_t> colour(u.num_vertices(), -1);
  const Vertex root = *std::min_element(component.begin(), component.end());
  colour[root] = 0;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : u.incident(v)) {
      const Vertex w = u.other_end(e, v);
      if (colour[w] < 0) {
        colour[w] = static_cast<std::int8_t>(1 - colour[v]);
        stack.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (Vertex v : component) {
    (colour[v] == 0 ? parts.left : parts.right).push_back(v);
  }
  std::sort(parts.left.begin(), parts.left.end());
  std::sort(parts.right.begin(), parts.right.end());
  return parts;
}

namespace {

// Number of `component` vertices reachable from root, following arcs
// forwards (reverse == false) or backwards.
std::size_t reach_count(const OrientedGraph& g, Vertex root, bool reverse) {
  const UndirectedMultigraph& u = g.underlying();
  std::vector<bool> seen(g.num_vertices(), false);
  seen[root] = true;
  std::vector<Vertex> stack{root};
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : u.incident(v)) {
      const Arc a = g.arc(e);
      const Vertex from = reverse ? a.head : a.tail;
      const Vertex to = reverse ? a.tail : a.head;
      if (from != v || seen[to]) continue;
      seen[to] = true;
      ++count;
      stack.push_back(to);
    }
  }
  return count;
}

}  // namespace

bool strongly_connected(const OrientedGraph& g,
                        std::span<const Vertex> component) {
  if (component.size() <= 1) return true;
  const Vertex root = component.front();
  return reach_count(g, root, false) == component.size() &&
         reach_count(g, root, true) == component.size();
}

bool is_eulerian(const OrientedGraph& g) {
  for (const VertexDegrees& d : degrees(g)) {
    if (d.in != d.out) return false;
  }
  return true;
}

namespace {

std::string_view strip(std::string_view s) {
  if (const auto hash = s.find('#'); hash != std::string_view::npos) {
    s = s.substr(0, hash);
  }
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view s, std::uint64_t& x, std::uint64_t& y) {
  const char* p = s.data();
  const char* end = s.data() + s.size();
  auto skip_ws = [&] {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, x);
  if (r1.ec != std::errc() || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, y);
  if (r2.ec != std::errc() || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

OrientedGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = strip(raw);
    if (line.empty()) continue;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    if (!parse_pair(line, x, y)) {
      throw ParseError(line_no, have_header
                                    ? "expected edge line \"u v\""
                                    : "expected header \"n m\"");
    }
    if (!have_header) {
      if (x > std::numeric_limits<Vertex>::max() ||
          y > std::numeric_limits<EdgeId>::max()) {
        throw ParseError(line_no, "header counts too large");
      }
      n = x;
      m = y;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more edge lines than the " +
                                    std::to_string(m) + " declared");
    }
    if (x >= n || y >= n) {
      throw ParseError(line_no, "vertex index " + std::to_string(std::max(x, y)) +
                                    " out of range for n = " +
                                    std::to_string(n));
    }
    if (x == y) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(x));
    }
    edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y)});
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edge lines, found " +
                                  std::to_string(edges.size()));
  }
  // Edges are stored as listed, so every flag is Forward.
  Orientation o(edges.size(), Direction::kForward);
  return OrientedGraph(UndirectedMultigraph(n, std::move(edges)), std::move(o));
}

bool operator==(const OrientedGraph& x, const OrientedGraph& y) {
  if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges()) {
    return false;
  }
  for (EdgeId e = 0; e < x.num_edges(); ++e) {
    const Arc a = x.arc(e);
    const Arc b = y.arc(e);
    if (a.tail != b.tail || a.head != b.head) return false;
  }
  return true;
}

std::string serialize(const OrientedGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc a = g.arc(e);
    out << a.tail << ' ' << a.head << '\n';
  }
  return out.str();
}

}  // namespace unistat

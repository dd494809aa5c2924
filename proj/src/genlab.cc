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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "unistat/errors.h"
#include "unistat/reduction.h"

namespace unistat {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

UndirectedMultigraph random_regular(std::uint32_t n, std::uint32_t delta,
                                    std::mt19937_64& rng) {
  if ((static_cast<std::uint64_t>(n) * delta) % 2 != 0) {
    throw GenerationError("DeltaRegularRandom needs n * Delta even");
  }
  if (delta > 0 && n < 2) {
    throw GenerationError("DeltaRegularRandom needs n >= 2 when Delta > 0");
  }
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * delta);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), delta, v);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size() && !loop; i += 2) {
      loop = stubs[i] == stubs[i + 1];
    }
    if (loop) continue;
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      edges.push_back({stubs[i], stubs[i + 1]});
    }
    return UndirectedMultigraph(n, std::move(edges));
  }
  throw GenerationError("no loop-free pairing found");
}

// Orients each component along an Eulerian circuit (Hierholzer). Needs
// every degree even.
Orientation eulerian_orientation(const UndirectedMultigraph& u) {
  for (Vertex v = 0; v < u.num_vertices(); ++v) {
    if (u.degree(v) % 2 != 0) {
      throw GenerationError("Eulerian mode needs all degrees even; vertex " +
                            std::to_string(v) + " has degree " +
                            std::to_string(u.degree(v)));
    }
  }
  Orientation o(u.num_edges());
  std::vector<bool> used(u.num_edges(), false);
  std::vector<std::size_t> next(u.num_vertices(), 0);
  for (Vertex root = 0; root < u.num_vertices(); ++root) {
    // Stack of (vertex, edge used to enter it).
    std::vector<std::pair<Vertex, EdgeId>> stack{{root, 0}};
    while (!stack.empty()) {
      const Vertex v = stack.back().first;
      auto inc = u.incident(v);
      while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
      if (next[v] == inc.size()) {
        stack.pop_back();
        continue;
      }
      const EdgeId e = inc[next[v]];
      used[e] = true;
      o.set(e, u.edge(e).a == v ? Direction::kForward : Direction::kBackward);
      stack.push_back({u.other_end(e, v), e});
    }
  }
  return o;
}

Bipartition require_bipartition(const UndirectedMultigraph& u) {
  Bipartition all;
  for (const Component& c : connected_components(u)) {
    std::optional<Bipartition> p = bipartition(u, c.vertices);
    if (!p) throw GenerationError("orientation mode needs a bipartite family");
    all.left.insert(all.left.end(), p->left.begin(), p->left.end());
    all.right.insert(all.right.end(), p->right.begin(), p->right.end());
  }
  std::sort(all.left.begin(), all.left.end());
  std::sort(all.right.begin(), all.right.end());
  return all;
}

Orientation property_p_orientation(const UndirectedMultigraph& u,
                                   const PropertyPOrientation& mode,
                                   std::mt19937_64& rng) {
  if (mode.k1 == 0 || mode.k2 == 0) {
    throw GenerationError("PropertyP mode needs k1, k2 >= 1");
  }
  const std::optional<std::uint32_t> delta = degree_delta(u);
  if (!delta || *delta != mode.k1 + mode.k2) {
    throw GenerationError("PropertyP mode needs a degree-Delta family with "
                          "k1 + k2 = Delta");
  }
  Bipartition parts = require_bipartition(u);
  // Build on a shuffled copy so different seeds give different orientations.
  std::vector<EdgeId> perm(u.num_edges());
  std::iota(perm.begin(), perm.end(), EdgeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> shuffled;
  shuffled.reserve(perm.size());
  for (EdgeId e : perm) shuffled.push_back(u.edge(e));
  const UndirectedMultigraph permuted(u.num_vertices(), std::move(shuffled));

  // construct_gstar swaps the sampled degrees, so ask for (k2, k1).
  BipartiteSpec spec;
  spec.left = std::move(parts.left);
  spec.right = std::move(parts.right);
  spec.k1 = mode.k2;
  spec.k2 = mode.k1;
  const std::optional<Orientation> found = construct_gstar(permuted, spec);
  if (!found) {
    throw GenerationError("no orientation realizes PropertyP(" +
                          std::to_string(mode.k1) + "," +
                          std::to_string(mode.k2) + ")");
  }
  Orientation o(u.num_edges());
  for (EdgeId j = 0; j < perm.size(); ++j) o.set(perm[j], (*found)[j]);
  return o;
}

}  // namespace

UndirectedMultigraph make_family(const Family& family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::visit(
      Overloaded{
          [](const Cycle& c) {
            if (c.n < 2) throw GenerationError("Cycle needs n >= 2");
            std::vector<Edge> edges;
            for (Vertex i = 0; i < c.n; ++i) edges.push_back({i, (i + 1) % c.n});
            return UndirectedMultigraph(c.n, std::move(edges));
          },
          [](const CompleteBipartite& k) {
            std::vector<Edge> edges;
            for (Vertex i = 0; i < k.a; ++i) {
              for (Vertex j = 0; j < k.b; ++j) edges.push_back({i, k.a + j});
            }
            return UndirectedMultigraph(k.a + k.b, std::move(edges));
          },
          [&rng](const DeltaRegularRandom& r) {
            return random_regular(r.n, r.delta, rng);
          },
          [](const Hypercube& h) {
            if (h.dimension > 20) throw GenerationError("Hypercube dimension > 20");
            const Vertex n = Vertex{1} << h.dimension;
            std::vector<Edge> edges;
            for (Vertex v = 0; v < n; ++v) {
              for (std::uint32_t k = 0; k < h.dimension; ++k) {
                const Vertex w = v ^ (Vertex{1} << k);
                if (v < w) edges.push_back({v, w});
              }
            }
            return UndirectedMultigraph(n, std::move(edges));
          },
          [](const Petersen&) {
            std::vector<Edge> edges;
            for (Vertex i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
            for (Vertex i = 0; i < 5; ++i) edges.push_back({i, i + 5});
            for (Vertex i = 0; i < 5; ++i) {
              edges.push_back({i + 5, (i + 2) % 5 + 5});
            }
            return UndirectedMultigraph(10, std::move(edges));
          },
          [](const CompleteGraph& k) {
            std::vector<Edge> edges;
            for (Vertex i = 0; i < k.n; ++i) {
              for (Vertex j = i + 1; j < k.n; ++j) edges.push_back({i, j});
            }
            return UndirectedMultigraph(k.n, std::move(edges));
          },
      },
      family);
}

OrientedGraph generate(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  UndirectedMultigraph u = make_family(spec.family, rng());
  Orientation o = std::visit(
      Overloaded{
          [&](const RandomOrientation&) {
            Orientation r(u.num_edges());
            std::bernoulli_distribution coin(0.5);
            for (EdgeId e = 0; e < u.num_edges(); ++e) {
              if (coin(rng)) r.set(e, Direction::kBackward);
            }
            return r;
          },
          [&](const EulerianOrientation&) { return eulerian_orientation(u); },
          [&](const PropertyPOrientation& p) {
            return property_p_orientation(u, p, rng);
          },
          [&](const AllOneWay&) {
            const Bipartition parts = require_bipartition(u);
            std::vector<bool> left(u.num_vertices(), false);
            for (Vertex v : parts.left) left[v] = true;
            Orientation r(u.num_edges());
            for (EdgeId e = 0; e < u.num_edges(); ++e) {
              r.set(e, left[u.edge(e).a] ? Direction::kForward
                                         : Direction::kBackward);
            }
            return r;
          },
      },
      spec.mode);
  return OrientedGraph(std::move(u), std::move(o));
}

double imbalance_bound(const OrientedGraph& g) {
  std::uint64_t total = 0;
  for (const VertexDegrees& d : degrees(g)) {
    total += d.out > d.in ? d.out - d.in : d.in - d.out;
  }
  return static_cast<double>(total) / 4.0;
}

PlantedInstance plant_far(const OrientedGraph& g, double eps,
                          std::uint64_t seed) {
  if (!(eps >= 0 && eps <= 1)) {
    throw std::invalid_argument("plant_far: eps must lie in [0, 1]");
  }
  if (!is_eulerian(g)) throw std::invalid_argument("plant_far: g must be Eulerian");
  const std::size_t m = g.num_edges();
  const double target = eps * static_cast<double>(m);
  const auto flips = static_cast<std::uint32_t>(std::ceil(target - 1e-9));
  if (flips == 0) return PlantedInstance{g, 0, 0.0};

  std::mt19937_64 rng(seed);
  std::vector<EdgeId> ids(m);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  double best = 0.0;
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (std::uint32_t i = 0; i < flips; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, m - 1);
      std::swap(ids[i], ids[pick(rng)]);
    }
    Orientation o = g.orientation();
    for (std::uint32_t i = 0; i < flips; ++i) o.flip(ids[i]);
    OrientedGraph candidate = g.with_orientation(std::move(o));
    const double bound = imbalance_bound(candidate);
    if (bound + 1e-9 >= target) {
      return PlantedInstance{std::move(candidate), flips, bound};
    }
    best = std::max(best, bound);
  }
  throw GenerationError("plant_far: 1000 attempts exhausted; best imbalance "
                        "bound " + std::to_string(best) + " < " +
                        std::to_string(target));
}

}  // namespace unistat

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

#include "unistat/testers.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "unistat/reduction.h"

namespace unistat {

namespace {

std::uint64_t ceil_to_count(double x) {
  if (!(x > 0)) return 0;
  return static_cast<std::uint64_t>(std::ceil(x));
}

// splitmix64 finalizer; gives each component its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Budget budget_formula(std::uint32_t delta, std::uint64_t num_edges, double eps,
                      std::optional<double> alpha, BudgetMode mode) {
  if (!(eps > 0 && eps <= 1)) {
    throw std::invalid_argument("eps must lie in (0, 1]");
  }
  Budget b{mode, 0};
  switch (mode) {
    case BudgetMode::kExact:
      b.value = num_edges;
      return b;
    case BudgetMode::kExpanderOneSided: {
      if (!alpha || !(*alpha > 0)) {
        throw std::invalid_argument("expander budget needs alpha > 0");
      }
      const double raw = kBudgetConstant * delta * std::log(1.0 / eps) /
                         (*alpha * eps);
      b.value = ceil_to_count(raw);
      break;
    }
    case BudgetMode::kLargeDegreeOneSided: {
      if (delta == 0) throw std::invalid_argument("large-degree budget needs Delta > 0");
      const double raw = kBudgetConstant * static_cast<double>(num_edges) /
                         (eps * eps * delta);
      b.value = delta + ceil_to_count(raw);
      break;
    }
  }
  b.value = std::max<std::uint64_t>(std::min(b.value, num_edges), 1);
  return b;
}

TesterVerdict eulerian_tester(EdgeOracle& oracle, const UndirectedMultigraph& u,
                              const Budget& budget, std::uint64_t seed) {
  const std::uint64_t start = oracle.queries();
  TesterVerdict verdict;
  verdict.budget_allowed = budget.value;
  const std::size_t n = u.num_vertices();

  auto balance_of = [&](Vertex v) {
    std::int64_t out_minus_in = 0;
    for (EdgeId e : u.incident(v)) {
      const Arc a = orient(u.edge(e), oracle.query(e));
      out_minus_in += a.tail == v ? 1 : -1;
    }
    return out_minus_in;
  };
  auto finish = [&](Decision d, std::optional<Vertex> witness) {
    verdict.decision = d;
    if (witness) verdict.witness = VertexWitness{*witness};
    verdict.queries_used = oracle.queries() - start;
    return verdict;
  };

  if (budget.mode == BudgetMode::kExact) {
    for (EdgeId e = 0; e < u.num_edges(); ++e) oracle.query(e);
    for (Vertex v = 0; v < n; ++v) {
      if (balance_of(v) != 0) return finish(Decision::kReject, v);
    }
    return finish(Decision::kAccept, std::nullopt);
  }

  if (n == 0) return finish(Decision::kAccept, std::nullopt);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<bool> examined(n, false);
  std::size_t examined_count = 0;
  while (examined_count < n) {
    const Vertex v = pick(rng);
    if (examined[v]) continue;
    std::uint64_t cost = 0;
    for (EdgeId e : u.incident(v)) cost += oracle.charges(e) ? 1 : 0;
    if (oracle.queries() - start + cost > budget.value) {
      verdict.budget_exhausted = true;
      return finish(Decision::kAccept, std::nullopt);
    }
    examined[v] = true;
    ++examined_count;
    if (balance_of(v) != 0) return finish(Decision::kReject, v);
  }
  return finish(Decision::kAccept, std::nullopt);
}

TesterVerdict uniformity_tester(EdgeOracle& oracle,
                                const UndirectedMultigraph& u,
                                const UniformityParams& params) {
  const std::optional<std::uint32_t> delta = degree_delta(u);
  if (!delta) {
    TesterVerdict na;
    na.decision = Decision::kNotApplicable;
    return na;
  }
  if (!params.exact && !params.alpha) {
    throw std::invalid_argument("uniformity_tester: alpha is required unless "
                                "exact mode is selected");
  }
  const BudgetMode mode =
      params.exact ? BudgetMode::kExact : BudgetMode::kExpanderOneSided;

  struct Plan {
    Component component;
    std::optional<Bipartition> parts;
    Budget budget;
  };
  std::vector<Plan> plans;
  TesterVerdict verdict;
  for (Component& c : connected_components(u)) {
    std::vector<Vertex> local(c.vertices.size());
    for (Vertex i = 0; i < local.size(); ++i) local[i] = i;
    Plan plan{std::move(c), std::nullopt, {}};
    plan.parts = bipartition(plan.component.graph, local);
    const std::uint64_t m = plan.component.graph.num_edges();
    if (plan.parts) {
      plan.budget = budget_formula(*delta, m, params.eps / 2, params.alpha, mode);
      verdict.budget_allowed += *delta + plan.budget.value;
    } else {
      plan.budget = budget_formula(*delta, m, params.eps, params.alpha, mode);
      verdict.budget_allowed += plan.budget.value;
    }
    plans.push_back(std::move(plan));
  }

  const std::uint64_t start = oracle.queries();
  auto reject = [&](std::optional<Witness> witness) {
    verdict.decision = Decision::kReject;
    verdict.witness = std::move(witness);
    verdict.queries_used = oracle.queries() - start;
    return verdict;
  };

  for (std::size_t i = 0; i < plans.size(); ++i) {
    const Plan& plan = plans[i];
    const Component& c = plan.component;
    const std::uint64_t seed = derive_seed(params.seed, i);
    ComponentOracle local_oracle(oracle, c.parent_edges);
    if (!plan.parts) {
      const TesterVerdict v =
          eulerian_tester(local_oracle, c.graph, plan.budget, seed);
      verdict.budget_exhausted |= v.budget_exhausted;
      if (v.decision == Decision::kReject) {
        const Vertex w = std::get<VertexWitness>(*v.witness).vertex;
        return reject(VertexWitness{c.vertices[w]});
      }
      continue;
    }
    std::vector<Vertex> all(c.vertices.size());
    for (Vertex j = 0; j < all.size(); ++j) all[j] = j;
    const SpecResult spec =
        infer_bipartite_spec(local_oracle, c.graph, all, seed);
    if (std::holds_alternative<SideSizeMismatch>(spec)) {
      return reject(std::nullopt);
    }
    const BipartiteSpec& bs = std::get<BipartiteSpec>(spec);
    const std::optional<Orientation> gstar = construct_gstar(c.graph, bs);
    if (!gstar) {
      std::optional<Witness> w;
      if (bs.k1 == 0 || bs.k2 == 0) w = VertexWitness{c.vertices[bs.sampled]};
      return reject(std::move(w));
    }
    Superimposition sup = superimpose(c.graph, local_oracle, *gstar);
    const TesterVerdict v =
        eulerian_tester(sup.oracle, *sup.graph, plan.budget, derive_seed(seed, 0));
    verdict.budget_exhausted |= v.budget_exhausted;
    if (v.decision == Decision::kReject) {
      const Vertex w = std::get<VertexWitness>(*v.witness).vertex;
      return reject(VertexWitness{c.vertices[w]});
    }
  }
  verdict.decision = Decision::kAccept;
  verdict.queries_used = oracle.queries() - start;
  return verdict;
}

}  // namespace unistat

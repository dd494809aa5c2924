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

#ifndef UNISTAT_TESTERS_H_
#define UNISTAT_TESTERS_H_

// Orientation-model testers. The Eulerian tester is a vertex-sampling
// 1-sided tester: it never rejects a balanced graph, and rejects only with a
// concrete unbalanced vertex in hand. Its soundness on far inputs rests on
// the caller's expansion promise, which sizes the budget; it is a baseline,
// not a reproduction of any published Eulerian tester.

#include <cstdint>
#include <optional>

#include "unistat/graph.h"
#include "unistat/oracle.h"
#include "unistat/structure.h"

namespace unistat {

// c in ceil(c * Delta * ln(1/eps) / (alpha * eps)).
inline constexpr double kBudgetConstant = 4.0;

enum class BudgetMode {
  kExpanderOneSided,
  kExact,
  // Delta + ceil(c * m / (eps^2 * Delta)). Exposed as a formula only.
  kLargeDegreeOneSided,
};

struct Budget {
  BudgetMode mode = BudgetMode::kExact;
  std::uint64_t value = 0;
};

// Requires 0 < eps <= 1, and alpha > 0 in expander mode; throws
// std::invalid_argument otherwise. Results are capped at m (at least 1).
Budget budget_formula(std::uint32_t delta, std::uint64_t num_edges, double eps,
                      std::optional<double> alpha, BudgetMode mode);

enum class Decision { kAccept, kReject, kNotApplicable };

struct TesterVerdict {
  Decision decision = Decision::kAccept;
  std::uint64_t queries_used = 0;
  std::uint64_t budget_allowed = 0;
  std::optional<Witness> witness;
  // Accepted because the next sampled vertex did not fit in the budget.
  bool budget_exhausted = false;
};

// Samples vertices of u uniformly with replacement and reveals all their
// edges through the oracle, rejecting at the first vertex with d+ != d-.
// Exact mode reveals every edge. Only charged queries count against the
// budget, so free edges (the public half of a superimposition) cost nothing.
TesterVerdict eulerian_tester(EdgeOracle& oracle, const UndirectedMultigraph& u,
                              const Budget& budget, std::uint64_t seed);

struct UniformityParams {
  double eps = 0.1;
  std::optional<double> alpha;  // expansion promise, sizes the budget
  bool exact = false;
  std::uint64_t seed = 0;
};

// Tests whether the hidden orientation of u has property P, one connected
// component at a time. Non-bipartite components go straight to the Eulerian
// tester. Bipartite components sample one left vertex, build G*, and test
// the superimposition for Eulerianity at eps/2. Returns kNotApplicable when
// u is not degree-Delta. Witness ids refer to u.
TesterVerdict uniformity_tester(EdgeOracle& oracle,
                                const UndirectedMultigraph& u,
                                const UniformityParams& params);

}  // namespace unistat

#endif  // UNISTAT_TESTERS_H_

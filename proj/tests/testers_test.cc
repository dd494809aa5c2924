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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "test_util.h"
#include "unistat/genlab.h"
#include "unistat/oracle.h"
#include "unistat/structure.h"

namespace unistat {
namespace {

using testing::directed_cycle;

TEST(BudgetFormula, Examples) {
  EXPECT_EQ(budget_formula(4, 128, 0.125, 0.5, BudgetMode::kExpanderOneSided).value, 128u);
  EXPECT_EQ(std::ceil(4 * 4 * std::log(8.0) / (0.5 * 0.125)), 533.0);
  EXPECT_EQ(budget_formula(4, 1000000, 0.1, 0.5, BudgetMode::kExpanderOneSided).value, 737u);
  EXPECT_EQ(budget_formula(4, 12, 0.3, std::nullopt, BudgetMode::kExact).value, 12u);
}

TEST(BudgetFormula, Errors) {
  EXPECT_THROW(budget_formula(4, 10, 0.1, std::nullopt, BudgetMode::kExpanderOneSided),
               std::invalid_argument);
  EXPECT_THROW(budget_formula(4, 10, 0.0, 0.5, BudgetMode::kExpanderOneSided),
               std::invalid_argument);
  EXPECT_THROW(budget_formula(4, 10, 1.5, 0.5, BudgetMode::kExpanderOneSided),
               std::invalid_argument);
  EXPECT_THROW(budget_formula(4, 10, 0.1, -1.0, BudgetMode::kExpanderOneSided),
               std::invalid_argument);
}

TEST(BudgetFormula, AtLeastOne) {
  // eps = 1 makes ln(1/eps) = 0.
  EXPECT_EQ(budget_formula(4, 100, 1.0, 0.5, BudgetMode::kExpanderOneSided).value, 1u);
}

TEST(EulerianTester, TriangleAlwaysAccepts) {
  OrientedGraph c3 = directed_cycle(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    QueryOracle q(c3.orientation());
    TesterVerdict v = eulerian_tester(q, c3.underlying(),
                                      {BudgetMode::kExpanderOneSided, 2}, seed);
    EXPECT_EQ(v.decision, Decision::kAccept);
    EXPECT_LE(v.queries_used, 2u);
    EXPECT_EQ(v.queries_used, q.queries());
  }
}

TEST(EulerianTester, ExactRejectsWithWitness) {
  OrientedGraph k22 = testing::all_one_way_kbip(2, 2);
  QueryOracle q(k22.orientation());
  TesterVerdict v = eulerian_tester(q, k22.underlying(), {BudgetMode::kExact, 4}, 0);
  EXPECT_EQ(v.decision, Decision::kReject);
  ASSERT_TRUE(v.witness);
  const auto& w = std::get<VertexWitness>(*v.witness);
  DegreeProfile d = degrees(k22);
  EXPECT_NE(d[w.vertex].in, d[w.vertex].out);
}

TEST(EulerianTester, NeverRejectsBalanced) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    OrientedGraph g = generate({DeltaRegularRandom{20, 4}, EulerianOrientation{}, rng()});
    QueryOracle q(g.orientation());
    TesterVerdict v = eulerian_tester(q, g.underlying(),
                                      {BudgetMode::kExpanderOneSided, 1 + rng() % 40}, rng());
    EXPECT_EQ(v.decision, Decision::kAccept);
    EXPECT_LE(v.queries_used, v.budget_allowed);
  }
}

TEST(EulerianTester, BudgetExhaustedFlag) {
  OrientedGraph g = generate({DeltaRegularRandom{20, 4}, EulerianOrientation{}, 3});
  QueryOracle q(g.orientation());
  TesterVerdict v = eulerian_tester(q, g.underlying(), {BudgetMode::kExpanderOneSided, 3}, 0);
  EXPECT_EQ(v.decision, Decision::kAccept);
  EXPECT_TRUE(v.budget_exhausted);
  EXPECT_EQ(v.queries_used, 0u);
}

TEST(UniformityTester, TriangleAcceptsEverySeed) {
  OrientedGraph c3 = directed_cycle(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    QueryOracle q(c3.orientation());
    TesterVerdict v = uniformity_tester(q, c3.underlying(), {0.1, 0.5, false, seed});
    EXPECT_EQ(v.decision, Decision::kAccept);
  }
}

TEST(UniformityTester, AllOneWayK22Rejects) {
  OrientedGraph k22 = testing::all_one_way_kbip(2, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle q(k22.orientation());
    TesterVerdict v = uniformity_tester(q, k22.underlying(), {0.1, 0.5, false, seed});
    EXPECT_EQ(v.decision, Decision::kReject);
    EXPECT_EQ(v.queries_used, 2u);
    ASSERT_TRUE(v.witness);
  }
}

TEST(UniformityTester, DirectedC4Accounting) {
  OrientedGraph c4 = directed_cycle(4);
  const std::uint64_t cap = 2 + budget_formula(2, 4, 0.05, 0.5, BudgetMode::kExpanderOneSided).value;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    QueryOracle q(c4.orientation());
    TesterVerdict v = uniformity_tester(q, c4.underlying(), {0.1, 0.5, false, seed});
    EXPECT_EQ(v.decision, Decision::kAccept);
    EXPECT_EQ(v.queries_used, q.queries());
    EXPECT_LE(v.queries_used, cap);
    EXPECT_LE(v.queries_used, v.budget_allowed);
  }
}

TEST(UniformityTester, NotApplicable) {
  OrientedGraph path = testing::directed(3, {{0, 1}, {1, 2}});
  QueryOracle q(path.orientation());
  EXPECT_EQ(uniformity_tester(q, path.underlying(), {0.1, 0.5, false, 0}).decision,
            Decision::kNotApplicable);
}

TEST(UniformityTester, MissingAlphaThrows) {
  OrientedGraph c3 = directed_cycle(3);
  QueryOracle q(c3.orientation());
  EXPECT_THROW(uniformity_tester(q, c3.underlying(), {0.1, std::nullopt, false, 0}),
               std::invalid_argument);
}

TEST(UniformityTester, ExactAgreesWithPropertyP) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 400; ++t) {
    Family f = t % 2 ? Family{Hypercube{3}} : Family{DeltaRegularRandom{10, 2u + t % 3}};
    if (t % 4 == 1) f = CompleteBipartite{3, 3};
    OrientedGraph g = generate({f, RandomOrientation{}, rng()});
    QueryOracle q(g.orientation());
    TesterVerdict v = uniformity_tester(q, g.underlying(), {0.1, std::nullopt, true, rng()});
    EXPECT_EQ(v.decision == Decision::kAccept, has_property_p(g).holds());
  }
}

TEST(UniformityTester, Deterministic) {
  OrientedGraph g = generate({DeltaRegularRandom{30, 4}, RandomOrientation{}, 5});
  QueryOracle q1(g.orientation()), q2(g.orientation());
  TesterVerdict a = uniformity_tester(q1, g.underlying(), {0.1, 0.5, false, 77});
  TesterVerdict b = uniformity_tester(q2, g.underlying(), {0.1, 0.5, false, 77});
  EXPECT_EQ(a.decision, b.decision);
  EXPECT_EQ(a.queries_used, b.queries_used);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(UniformityTester, RejectWitnessIsInParentIds) {
  // Component 0 is a directed triangle; component 1 an unbalanced triangle.
  OrientedGraph g = testing::directed(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {3, 5}});
  QueryOracle q(g.orientation());
  TesterVerdict v = uniformity_tester(q, g.underlying(), {0.1, std::nullopt, true, 0});
  ASSERT_EQ(v.decision, Decision::kReject);
  const auto& w = std::get<VertexWitness>(*v.witness);
  EXPECT_TRUE(w.vertex == 3 || w.vertex == 5);
}

}  // namespace
}  // namespace unistat

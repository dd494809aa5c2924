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

#include "unistat/oracle.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "unistat/errors.h"

namespace unistat {
namespace {

TEST(QueryOracle, CountsAndMemoizes) {
  Orientation o(4);
  o.set(2, Direction::kBackward);
  QueryOracle q(o);
  EXPECT_EQ(q.queries(), 0u);
  EXPECT_TRUE(q.charges(2));
  EXPECT_EQ(q.query(2), Direction::kBackward);
  EXPECT_EQ(q.queries(), 1u);
  EXPECT_FALSE(q.charges(2));
  EXPECT_EQ(q.query(2), Direction::kBackward);
  EXPECT_EQ(q.queries(), 1u);
  EXPECT_EQ(q.query(0), Direction::kForward);
  EXPECT_EQ(q.queries(), 2u);
}

TEST(QueryOracle, CapIsEnforced) {
  QueryOracle q(Orientation(5), 2);
  q.query(0);
  q.query(1);
  q.query(1);
  EXPECT_THROW(q.query(2), BudgetExhausted);
  EXPECT_EQ(q.queries(), 2u);
}

TEST(ComponentOracle, TranslatesIds) {
  Orientation o(5);
  o.set(4, Direction::kBackward);
  QueryOracle q(o);
  std::vector<EdgeId> map{3, 4};
  ComponentOracle c(q, map);
  EXPECT_EQ(c.num_edges(), 2u);
  EXPECT_EQ(c.query(1), Direction::kBackward);
  EXPECT_EQ(q.queries(), 1u);
  EXPECT_FALSE(q.charges(4));
}

TEST(SuperimposedOracle, PublicHalfIsFree) {
  Orientation hidden(3);
  hidden.set(1, Direction::kBackward);
  QueryOracle q(hidden);
  Orientation pub(3, Direction::kBackward);
  SuperimposedOracle s(q, pub);
  EXPECT_EQ(s.num_edges(), 6u);
  EXPECT_FALSE(s.charges(4));
  EXPECT_EQ(s.query(4), Direction::kBackward);
  EXPECT_EQ(s.queries(), 0u);
  EXPECT_TRUE(s.charges(1));
  EXPECT_EQ(s.query(1), Direction::kBackward);
  EXPECT_EQ(s.queries(), 1u);
  EXPECT_EQ(q.queries(), 1u);
  s.query(1);
  s.query(5);
  EXPECT_EQ(s.queries(), 1u);
}

}  // namespace
}  // namespace unistat

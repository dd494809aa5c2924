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

#ifndef UNISTAT_ORACLE_H_
#define UNISTAT_ORACLE_H_

// Edge-direction oracles for the orientation model. The undirected graph is
// public; each edge direction costs one query the first time it is revealed.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unistat/graph.h"

namespace unistat {

class EdgeOracle {
 public:
  virtual ~EdgeOracle() = default;

  virtual std::size_t num_edges() const = 0;
  virtual Direction query(EdgeId e) = 0;
  // Whether query(e) would increase queries().
  virtual bool charges(EdgeId e) const = 0;
  virtual std::uint64_t queries() const = 0;
};

// Memoized oracle over a hidden orientation.
class QueryOracle final : public EdgeOracle {
 public:
  explicit QueryOracle(Orientation hidden,
                       std::optional<std::uint64_t> cap = std::nullopt);

  std::size_t num_edges() const override { return hidden_.size(); }
  // Throws BudgetExhausted if revealing e would exceed the cap.
  Direction query(EdgeId e) override;
  bool charges(EdgeId e) const override { return !revealed_[e]; }
  std::uint64_t queries() const override { return counter_; }

  std::optional<std::uint64_t> cap() const { return cap_; }

 private:
  Orientation hidden_;
  std::vector<bool> revealed_;
  std::uint64_t counter_ = 0;
  std::optional<std::uint64_t> cap_;
};

// View of a parent oracle through a component's local edge ids.
class ComponentOracle final : public EdgeOracle {
 public:
  ComponentOracle(EdgeOracle& parent, std::span<const EdgeId> parent_edges)
      : parent_(parent), parent_edges_(parent_edges) {}

  std::size_t num_edges() const override { return parent_edges_.size(); }
  Direction query(EdgeId e) override { return parent_.query(parent_edges_[e]); }
  bool charges(EdgeId e) const override {
    return parent_.charges(parent_edges_[e]);
  }
  std::uint64_t queries() const override { return parent_.queries(); }

 private:
  EdgeOracle& parent_;
  std::span<const EdgeId> parent_edges_;
};

// Oracle for the superimposition of a hidden orientation (edge ids 0..m-1)
// with a public one (edge ids m..2m-1, edge m+i parallel to edge i). Public
// edges are answered for free; hidden edges cost one parent query each.
// queries() always equals the parent's counter.
class SuperimposedOracle final : public EdgeOracle {
 public:
  SuperimposedOracle(EdgeOracle& hidden, Orientation public_half);

  std::size_t num_edges() const override { return 2 * public_.size(); }
  Direction query(EdgeId e) override;
  bool charges(EdgeId e) const override {
    return e < public_.size() && hidden_.charges(e);
  }
  std::uint64_t queries() const override { return hidden_.queries(); }

 private:
  EdgeOracle& hidden_;
  Orientation public_;
};

}  // namespace unistat

#endif  // UNISTAT_ORACLE_H_

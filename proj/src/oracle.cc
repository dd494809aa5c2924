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

#include <stdexcept>
#include <string>

#include "unistat/errors.h"

namespace unistat {

QueryOracle::QueryOracle(Orientation hidden, std::optional<std::uint64_t> cap)
    : hidden_(std::move(hidden)), revealed_(hidden_.size(), false), cap_(cap) {}

Direction QueryOracle::query(EdgeId e) {
  if (e >= hidden_.size()) {
    throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  }
  if (!revealed_[e]) {
    if (cap_ && counter_ >= *cap_) {
      throw BudgetExhausted("query budget of " + std::to_string(*cap_) +
                            " exhausted");
    }
    revealed_[e] = true;
    ++counter_;
  }
  return hidden_[e];
}

SuperimposedOracle::SuperimposedOracle(EdgeOracle& hidden,
                                       Orientation public_half)
    : hidden_(hidden), public_(std::move(public_half)) {
  if (public_.size() != hidden_.num_edges()) {
    throw std::invalid_argument(
        "public orientation must cover the hidden graph's edges");
  }
}

Direction SuperimposedOracle::query(EdgeId e) {
  const std::size_t m = public_.size();
  if (e >= 2 * m) {
    throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  }
  return e < m ? hidden_.query(e) : public_[static_cast<EdgeId>(e - m)];
}

}  // namespace unistat
